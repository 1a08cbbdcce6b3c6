#include "modsem/cli.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "modsem/corpus.hpp"
#include "modsem/errors.hpp"
#include "modsem/function_lab.hpp"
#include "modsem/parser.hpp"
#include "modsem/session.hpp"

namespace modsem {

namespace {

using nlohmann::json;

std::string braces(const std::vector<std::string>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
    return out + "}";
}

std::string model_text(const ModelView& v, const std::string& indent = "") {
    return indent + "true: " + braces(v.true_atoms) + "\n" + indent + "false: " + braces(v.false_atoms) + "\n" +
           indent + "undefined: " + braces(v.undefined_atoms) + "\n";
}

std::string mode_name(EvalMode m) {
    switch (m) {
    case EvalMode::modular: return "modular";
    case EvalMode::monolithic: return "monolithic";
    case EvalMode::compare: return "compare";
    }
    return "unknown";
}

struct Loaded {
    SourceProgram program;
    std::vector<Literal> assumptions;
};

Loaded load(const RunConfig& c) {
    return {parse_program(c.source), parse_literals(c.assume)};
}

CommandResult run_compare(const RunConfig& c) {
    const auto [program, assumptions] = load(c);
    const Session session(program.modules, assumptions, {}, c.max_atoms);
    const auto start = session.start(assumptions);
    const auto cmp = compare_evaluations(session.ground_plan(stratify(program.modules)), start, c.semantics);
    const auto modular = view_model(session.universe(), cmp.modular, c.semantics);
    const auto monolithic = view_model(session.universe(), cmp.monolithic, c.semantics);

    CommandResult r;
    r.exit_code = cmp.equal ? 0 : 1;
    if (c.format == OutputFormat::json) {
        json j = to_json(modular);
        j["semantics"] = to_string(c.semantics);
        j["mode"] = "compare";
        j["monolithic"] = to_json(monolithic);
        j["equal"] = cmp.equal;
        r.output = j.dump() + "\n";
    } else {
        r.output = "semantics: " + to_string(c.semantics) + "\nmodular:\n" + model_text(modular, "  ") +
                   "monolithic:\n" + model_text(monolithic, "  ") + (cmp.equal ? "EQUAL\n" : "DIFFERENT\n");
    }
    return r;
}

CommandResult run_eval(const RunConfig& c) {
    if (c.mode == EvalMode::compare) return run_compare(c);
    const auto [program, assumptions] = load(c);
    const Session session(program.modules, assumptions, {}, c.max_atoms);
    const auto start = session.start(assumptions);
    const auto model = c.mode == EvalMode::modular
                           ? modular_eval(session.ground_plan(stratify(program.modules)), start, c.semantics)
                           : monolithic_eval(session.grounded(), start, c.semantics);
    const auto view = view_model(session.universe(), model, c.semantics);

    CommandResult r;
    if (c.format == OutputFormat::json) {
        json j = to_json(view);
        j["semantics"] = to_string(c.semantics);
        j["mode"] = mode_name(c.mode);
        r.output = j.dump() + "\n";
    } else {
        r.output = "semantics: " + to_string(c.semantics) + "\nmode: " + mode_name(c.mode) + "\n" + model_text(view);
    }
    return r;
}

// Module names reachable from `root` through the call graph, root included.
std::vector<std::string> dependency_closure(const std::vector<Module>& modules, const std::string& root) {
    std::vector<std::string> out{root};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto caller = std::find_if(modules.begin(), modules.end(), [&](const Module& m) { return m.name() == out[i]; });
        if (caller == modules.end()) throw SemanticError("no module named " + out[i]);
        for (const auto& callee : modules)
            if (callee.name() != caller->name() && !precedes(callee, *caller) &&
                std::find(out.begin(), out.end(), callee.name()) == out.end())
                out.push_back(callee.name());
    }
    return out;
}

CommandResult run_residualize(const RunConfig& c) {
    if (c.module.empty()) throw SemanticError("residualize needs --module");
    const auto [program, assumptions] = load(c);
    stratify(program.modules); // modular structure is required
    const Session session(program.modules, assumptions, {}, c.max_atoms);
    const auto start = session.start(assumptions);

    const auto closure = dependency_closure(program.modules, c.module);
    std::vector<GroundModule> lower, upper;
    for (const auto& g : session.grounded())
        (std::count(closure.begin(), closure.end(), g.name()) ? lower : upper).push_back(g);
    const GroundModule empty(session.universe_ptr(), "rest", {}, {}, {});
    const GroundModule lower_union = unite(lower);
    const GroundModule upper_union = upper.empty() ? empty : unite(upper);

    auto report = partial_eval_check(upper_union, lower_union, start, c.semantics);
    const Module residual(c.module + "_residual", report.residual.rules(), report.residual.defines());
    const auto view = view_model(session.universe(), report.original, c.semantics);

    CommandResult r;
    r.exit_code = report.equal ? 0 : 1;
    if (c.format == OutputFormat::json) {
        json rules = json::array();
        for (const auto& rule : residual.rules()) rules.push_back(to_string(rule));
        json j = to_json(view);
        j["semantics"] = to_string(c.semantics);
        j["module"] = c.module;
        j["residual"] = to_string(residual);
        j["rules"] = rules;
        j["equal"] = report.equal;
        r.output = j.dump() + "\n";
    } else {
        r.output = to_string(residual) + "% semantics: " + to_string(c.semantics) + "\n% residual program " +
                   (report.equal ? "reproduces" : "does NOT reproduce") + " the model of the full program\n";
    }
    return r;
}

std::string answer_text(const std::vector<std::string>& vars, const Answer& a) {
    if (vars.empty()) return "yes";
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i] + "=" + a.values[i];
    return out;
}

CommandResult run_query(const RunConfig& c) {
    if (c.goal.empty()) throw SemanticError("query needs --goal");
    const auto [program, assumptions] = load(c);
    const auto goal = parse_literals(c.goal);
    const auto result = run_query(program.modules, goal, c.semantics, assumptions, c.max_atoms);

    CommandResult r;
    if (c.format == OutputFormat::json) {
        json answers = json::array(), undefined = json::array();
        for (const auto& a : result.answers) answers.push_back(a.values);
        for (const auto& a : result.undefined) undefined.push_back(a.values);
        r.output = json{{"semantics", to_string(c.semantics)},
                        {"variables", result.variables},
                        {"answers", answers},
                        {"undefined", undefined}}
                       .dump() +
                   "\n";
    } else {
        std::ostringstream os;
        os << "semantics: " << to_string(c.semantics) << "\n";
        if (result.answers.empty()) os << "no answers\n";
        for (const auto& a : result.answers) os << answer_text(result.variables, a) << "\n";
        for (const auto& a : result.undefined) os << "undefined: " << answer_text(result.variables, a) << "\n";
        r.output = os.str();
    }
    return r;
}

CommandResult run_lab(const RunConfig& c) {
    std::vector<std::string> lemma_lattices = c.lattices;
    if (lemma_lattices.empty())
        lemma_lattices = {"chain(2)", "chain(3)", "chain(4)", "chain(5)", "boolean(1)", "boolean(2)", "appendix_chain"};

    std::vector<CensusReport> censuses;
    for (const auto& name : lemma_lattices)
        censuses.push_back(run_lemma_census(std::make_shared<const FinitePoset>(builtin_from_name(name))));
    for (const auto* name : {"chain(1)", "chain(2)", "appendix_chain"})
        censuses.push_back(run_sandwich_census(std::make_shared<const FinitePoset>(builtin_from_name(name)),
                                               SandwichMode::all_functions));
    for (const auto* name : {"chain(4)", "boolean(2)"})
        censuses.push_back(run_sandwich_census(std::make_shared<const FinitePoset>(builtin_from_name(name)),
                                               SandwichMode::monotone));
    const auto duality = reproduce_duality_counterexample();
    const auto appendix = reproduce_appendix_example();

    const bool passed = duality.reproduced && appendix.reproduced &&
                        std::all_of(censuses.begin(), censuses.end(), [](const CensusReport& r) { return r.passed(); });
    CommandResult r;
    r.exit_code = passed ? 0 : 1;
    if (c.format == OutputFormat::json) {
        json lemma = json::array(), sandwich = json::array();
        for (const auto& census : censuses) (census.kind == "lemma" ? lemma : sandwich).push_back(to_json(census));
        r.output = json{{"lemma", lemma},
                        {"sandwich", sandwich},
                        {"duality", to_json(duality)},
                        {"appendix", to_json(appendix)},
                        {"passed", passed}}
                       .dump() +
                   "\n";
    } else {
        for (const auto& census : censuses) r.output += to_text(census);
        r.output += to_text(duality) + to_text(appendix) + "lab: " + (passed ? "PASS" : "FAIL") + "\n";
    }
    return r;
}

CommandResult run_corpus_command(const RunConfig& c) {
    CorpusOptions options;
    options.programs = c.count;
    const auto report = run_corpus(c.seed, options);
    CommandResult r;
    r.exit_code = report.passed() ? 0 : 1;
    r.output = c.format == OutputFormat::json ? to_json(report).dump() + "\n" : to_text(report);
    return r;
}

} // namespace

CommandResult execute(const RunConfig& config) {
    try {
        if (config.max_atoms == 0) throw DomainError("--max-atoms must be positive");
        if (config.command == "eval") return run_eval(config);
        if (config.command == "compare") return run_compare(config);
        if (config.command == "residualize") return run_residualize(config);
        if (config.command == "query") return run_query(config);
        if (config.command == "lab") return run_lab(config);
        if (config.command == "corpus") {
            if (config.count == 0) throw DomainError("--count must be positive");
            return run_corpus_command(config);
        }
        return {1, "", "unknown command '" + config.command + "'\n"};
    } catch (const ParseError& e) {
        return {2, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace modsem
