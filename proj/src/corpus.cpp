#include "modsem/corpus.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "modsem/errors.hpp"
#include "modsem/semantics.hpp"
#include "modsem/session.hpp"

namespace modsem {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, n). Modulo keeps the stream identical across standard libraries.
    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    bool chance(std::size_t num, std::size_t den) { return pick(den) < num; }

private:
    std::mt19937_64 engine_;
};

const std::vector<std::string> variable_pool{"X", "Y", "Z"};

struct Generator {
    Rng& rng;
    std::vector<std::string> constants;

    Term constant() { return Term::constant(constants[rng.pick(constants.size())]); }

    // Argument drawn from `bound` variables when possible, else a constant.
    Term bound_term(const std::vector<std::string>& bound) {
        if (!bound.empty() && rng.chance(2, 3)) return Term::variable(bound[rng.pick(bound.size())]);
        return constant();
    }

    Atom free_atom(const PredicateSymbol& sym, std::vector<std::string>& bound) {
        Atom a{sym.name, {}};
        for (std::size_t k = 0; k < sym.arity; ++k) {
            if (rng.chance(2, 3)) {
                const auto& v = variable_pool[rng.pick(variable_pool.size())];
                a.args.push_back(Term::variable(v));
                if (std::find(bound.begin(), bound.end(), v) == bound.end()) bound.push_back(v);
            } else {
                a.args.push_back(constant());
            }
        }
        return a;
    }

    Atom bound_atom(const PredicateSymbol& sym, const std::vector<std::string>& bound) {
        Atom a{sym.name, {}};
        for (std::size_t k = 0; k < sym.arity; ++k) a.args.push_back(bound_term(bound));
        return a;
    }

    // Safe literals: positives first bind the variables, negatives reuse them.
    std::vector<Literal> body(const std::vector<PredicateSymbol>& callable, std::size_t length, bool negation,
                              std::vector<std::string>& bound) {
        std::vector<std::pair<bool, PredicateSymbol>> plan;
        for (std::size_t i = 0; i < length; ++i) {
            const bool positive = i == 0 || !negation || !rng.chance(1, 3);
            plan.emplace_back(positive, callable[rng.pick(callable.size())]);
        }
        std::stable_partition(plan.begin(), plan.end(), [](const auto& p) { return p.first; });
        std::vector<Literal> out;
        for (const auto& [positive, sym] : plan) {
            if (positive) out.push_back({true, free_atom(sym, bound)});
            else out.push_back({false, bound_atom(sym, bound)});
        }
        return out;
    }

    Rule rule(const std::vector<PredicateSymbol>& heads, const std::vector<PredicateSymbol>& callable, bool negation) {
        std::vector<std::string> bound;
        const std::size_t length = rng.pick(4);
        auto b = body(callable, length, negation, bound);
        Atom head = bound_atom(heads[rng.pick(heads.size())], bound);
        return {std::move(head), std::move(b)};
    }
};

std::vector<PredicateSymbol> make_predicates(Rng& rng, const std::string& prefix, std::size_t count) {
    std::vector<PredicateSymbol> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back({prefix + std::to_string(i), rng.pick(3)});
    return out;
}

} // namespace

CorpusProgram generate_program(std::uint64_t seed, bool allow_negation) {
    Rng rng(seed);
    CorpusProgram p;
    p.seed = seed;

    Generator gen{rng, {}};
    const std::size_t nconst = 1 + rng.pick(4);
    for (std::size_t i = 1; i <= nconst; ++i) gen.constants.push_back(std::to_string(i));
    p.constants.insert(gen.constants.begin(), gen.constants.end());

    const auto base = make_predicates(rng, "b", rng.pick(3));
    const auto lower = make_predicates(rng, "q", 1 + rng.pick(2));
    const auto upper = make_predicates(rng, "p", 1 + rng.pick(2));
    p.base.insert(base.begin(), base.end());

    std::vector<PredicateSymbol> lower_callable = base;
    lower_callable.insert(lower_callable.end(), lower.begin(), lower.end());
    std::vector<PredicateSymbol> upper_callable = lower_callable;
    upper_callable.insert(upper_callable.end(), upper.begin(), upper.end());

    std::vector<Rule> lower_rules, upper_rules;
    const std::size_t n_lower = 1 + rng.pick(6);
    const std::size_t n_upper = 1 + rng.pick(6);
    for (std::size_t i = 0; i < n_lower; ++i) lower_rules.push_back(gen.rule(lower, lower_callable, allow_negation));
    for (std::size_t i = 0; i < n_upper; ++i) upper_rules.push_back(gen.rule(upper, upper_callable, allow_negation));
    p.lower = Module("lower", std::move(lower_rules), PredicateSet(lower.begin(), lower.end()));
    p.upper = Module("upper", std::move(upper_rules), PredicateSet(upper.begin(), upper.end()));

    // Start element: each base atom true, false or absent.
    for (const auto& sym : base) {
        std::vector<std::size_t> tuple(sym.arity, 0);
        while (true) {
            Atom a{sym.name, {}};
            for (std::size_t k : tuple) a.args.push_back(Term::constant(gen.constants[k]));
            const std::size_t roll = rng.pick(3);
            if (roll == 0) p.start.push_back({true, a});
            else if (roll == 1 && allow_negation) p.start.push_back({false, a});
            std::size_t k = 0;
            while (k < tuple.size() && ++tuple[k] == nconst) tuple[k++] = 0;
            if (k == tuple.size()) break;
        }
    }

    std::vector<std::string> bound;
    p.goal = gen.body(upper_callable, 1 + rng.pick(2), allow_negation, bound);
    return p;
}

bool CorpusReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CorpusCheck& c) { return c.ok(); });
}

const CorpusCheck& CorpusReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw DomainError("no corpus check named " + name);
}

namespace {

constexpr std::size_t max_recorded_failures = 5;

void record(CorpusCheck& c, bool ok, const std::string& what) {
    ++c.checked;
    if (ok) ++c.passed;
    else if (c.failures.size() < max_recorded_failures) c.failures.push_back(what);
}

// A random consistent literal set; only positive when `positive_only`.
SignedSet random_signed(Rng& rng, std::size_t atoms, bool positive_only) {
    SignedSet s(atoms);
    for (std::size_t a = 0; a < atoms; ++a) {
        const std::size_t roll = rng.pick(3);
        if (roll == 0) s.pos.set(a);
        else if (roll == 1 && !positive_only) s.neg.set(a);
    }
    return s;
}

SignedSet random_subset(Rng& rng, const SignedSet& s) {
    SignedSet out(s.universe_size());
    for (std::size_t a = 0; a < s.universe_size(); ++a) {
        if (s.pos.test(a) && rng.chance(1, 2)) out.pos.set(a);
        if (s.neg.test(a) && rng.chance(1, 2)) out.neg.set(a);
    }
    return out;
}

bool literal_holds(const Literal& l, const Universe& u, const PartialInterpretation& m, SemanticsKind kind) {
    const AtomId a = u.id(l.atom);
    if (l.positive) return m.is_true(a);
    return kind == SemanticsKind::least_model ? !m.is_true(a) : m.is_false(a);
}

bool literal_fails(const Literal& l, const Universe& u, const PartialInterpretation& m, SemanticsKind kind) {
    const AtomId a = u.id(l.atom);
    if (kind == SemanticsKind::least_model) return l.positive ? !m.is_true(a) : m.is_true(a);
    return l.positive ? m.is_false(a) : m.is_true(a);
}

Literal substitute(const Literal& l, const std::vector<std::string>& vars, const std::vector<std::string>& values) {
    Literal out = l;
    for (auto& t : out.atom.args)
        if (t.is_variable()) {
            const auto pos = std::find(vars.begin(), vars.end(), t.name) - vars.begin();
            t = Term::constant(values[pos]);
        }
    return out;
}

const std::array<SemanticsKind, 3> all_kinds{SemanticsKind::least_model, SemanticsKind::fitting,
                                             SemanticsKind::well_founded};

// The goal wrapper check: theta makes the goal true (false) in the model of the
// program iff answer(theta) is true (false) in the model of the wrapped union.
bool goal_wrapper_agrees(const CorpusProgram& prog, SemanticsKind kind, std::string& why) {
    std::vector<Literal> goal = prog.goal;
    if (kind == SemanticsKind::least_model)
        goal.erase(std::remove_if(goal.begin(), goal.end(), [](const Literal& l) { return !l.positive; }), goal.end());

    PredicateSet existing = prog.base;
    for (const auto* m : {&prog.lower, &prog.upper}) {
        auto s = m->predicates();
        existing.insert(s.begin(), s.end());
    }
    const Module wrapper = wrap_goal(goal, existing);
    const PredicateSymbol answer = *wrapper.defines().begin();

    const Session session({prog.lower, prog.upper, wrapper}, prog.start, prog.constants);
    const auto& u = session.universe();

    std::vector<Literal> start = prog.start;
    if (kind == SemanticsKind::least_model)
        start.erase(std::remove_if(start.begin(), start.end(), [](const Literal& l) { return !l.positive; }), start.end());
    const auto x = session.start(start);
    const auto program_model =
        monolithic_eval({session.module("lower"), session.module("upper")}, x, kind);
    const auto wrapped_model = monolithic_eval(session.grounded(), x, kind);

    const auto vars = variables_of(goal);
    std::vector<std::size_t> choice(vars.size(), 0);
    const auto& consts = u.constants();
    while (true) {
        std::vector<std::string> values;
        for (std::size_t c : choice) values.push_back(consts[c]);
        bool all_true = true, some_false = false;
        for (const auto& l : goal) {
            const Literal g = substitute(l, vars, values);
            all_true = all_true && literal_holds(g, u, program_model, kind);
            some_false = some_false || literal_fails(g, u, program_model, kind);
        }
        Atom head{answer.name, {}};
        for (const auto& v : values) head.args.push_back(Term::constant(v));
        const AtomId a = u.id(head);
        const bool answer_true = wrapped_model.is_true(a);
        const bool answer_false = kind == SemanticsKind::least_model ? !answer_true : wrapped_model.is_false(a);
        if (all_true != answer_true || some_false != answer_false) {
            why = to_string(kind) + " disagrees at " + to_string(head);
            return false;
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == consts.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    // Wrapped and plain models agree on every original atom.
    const AtomSet original = ~u.atoms_of({answer});
    const auto strip = [&](const PartialInterpretation& m) {
        return SignedSet(m.true_atoms() & original, m.false_atoms() & original);
    };
    if (!(strip(program_model) == strip(wrapped_model))) {
        why = to_string(kind) + ": wrapping the goal changed the model of the program";
        return false;
    }
    return true;
}

} // namespace

CorpusReport run_corpus(std::uint64_t seed, const CorpusOptions& options) {
    CorpusReport report;
    report.seed = seed;
    report.programs = options.programs;
    auto add = [&](const std::string& name) -> CorpusCheck& {
        report.checks.push_back({name, 0, 0, {}});
        return report.checks.back();
    };
    // References into checks stay valid: nothing is added after this block.
    report.checks.reserve(16);
    CorpusCheck* modular[3] = {&add("modular_least_model"), &add("modular_fitting"), &add("modular_well_founded")};
    CorpusCheck* partial[3] = {&add("partial_eval_least_model"), &add("partial_eval_fitting"),
                               &add("partial_eval_well_founded")};
    CorpusCheck& mono_tp = add("monotone_tp");
    CorpusCheck& mono_fitting = add("monotone_fitting");
    CorpusCheck& mono_wp = add("monotone_wp");
    CorpusCheck& goal = add("goal_wrapper");
    CorpusCheck& fitting_wf = add("fitting_below_wf");
    CorpusCheck& w_ineq = add("w_inequalities");
    CorpusCheck& unfounded = add("unfounded_extension");

    for (std::size_t i = 0; i < options.programs; ++i) {
        const std::uint64_t item_seed = seed * 1000003ULL + i;
        const CorpusProgram definite = generate_program(item_seed, false);
        const CorpusProgram normal = generate_program(item_seed, true);
        const std::string tag = "seed " + std::to_string(item_seed);

        for (std::size_t k = 0; k < all_kinds.size(); ++k) {
            const SemanticsKind kind = all_kinds[k];
            const CorpusProgram& prog = kind == SemanticsKind::least_model ? definite : normal;
            const Session session({prog.lower, prog.upper}, prog.start, prog.constants);
            const auto x = session.start(prog.start);
            try {
                const auto cmp = compare_evaluations(session.ground_plan(stratify(session.modules())), x, kind);
                record(*modular[k], cmp.equal, tag);
            } catch (const Error& e) {
                record(*modular[k], false, tag + ": " + e.what());
            }
            try {
                const auto pe = partial_eval_check(session.module("upper"), session.module("lower"), x, kind);
                record(*partial[k], pe.equal, tag);
            } catch (const Error& e) {
                record(*partial[k], false, tag + ": " + e.what());
            }
        }

        Rng rng(item_seed ^ 0x9e3779b97f4a7c15ULL);
        {
            const Session session({definite.lower, definite.upper}, definite.start, definite.constants);
            const GroundModule all = session.ground_union();
            const std::size_t n = session.universe().atom_count();
            bool ok = true;
            for (std::size_t s = 0; s < options.monotonicity_pairs && ok; ++s) {
                const SignedSet big = random_signed(rng, n, true);
                const SignedSet small = random_subset(rng, big);
                ok = tp_apply(all, small.pos).is_subset_of(tp_apply(all, big.pos));
            }
            record(mono_tp, ok, tag);
        }

        const Session session({normal.lower, normal.upper}, normal.start, normal.constants);
        const GroundModule all = session.ground_union();
        const GroundModule& upper = session.module("upper");
        const GroundModule& lower = session.module("lower");
        const std::size_t n = session.universe().atom_count();
        {
            bool fit_ok = true, wp_ok = true;
            for (std::size_t s = 0; s < options.monotonicity_pairs; ++s) {
                const SignedSet big = random_signed(rng, n, false);
                const SignedSet small = random_subset(rng, big);
                fit_ok = fit_ok && fitting_raw(all, small).subset_of(fitting_raw(all, big));
                wp_ok = wp_ok && wp_raw(all, small).subset_of(wp_raw(all, big));
            }
            record(mono_fitting, fit_ok, tag);
            record(mono_wp, wp_ok, tag);
        }

        {
            const auto x = session.start(normal.start);
            const auto fit = evaluate(SemanticsKind::fitting, all, x);
            const auto wfm = evaluate(SemanticsKind::well_founded, all, x);
            record(fitting_wf, fit.literals().subset_of(wfm.literals()), tag);
        }

        {
            bool w_ok = true, u_ok = true;
            std::string why;
            for (std::size_t s = 0; s < options.samples; ++s) {
                const SignedSet i = random_signed(rng, n, false);
                const auto r = check_w_inequalities(upper, lower, i);
                if (!r.holds() && w_ok) {
                    w_ok = false;
                    why = tag + " sample " + std::to_string(s);
                }
                for (const GroundModule* m : {&upper, &lower}) {
                    // J: fresh literals on atoms outside def(P) that I leaves open.
                    SignedSet j = random_signed(rng, n, false);
                    const AtomSet open = ~(i.pos | i.neg | m->defined_atoms());
                    j.pos &= open;
                    j.neg &= open;
                    u_ok = u_ok && greatest_unfounded(*m, i).is_subset_of(greatest_unfounded(*m, i.united(j)));
                }
            }
            record(w_ineq, w_ok, why.empty() ? tag : why);
            record(unfounded, u_ok, tag);
        }

        if (i < options.goal_programs) {
            bool ok = true;
            std::string why;
            try {
                for (SemanticsKind kind : all_kinds) {
                    const CorpusProgram& prog = kind == SemanticsKind::least_model ? definite : normal;
                    if (!goal_wrapper_agrees(prog, kind, why)) {
                        ok = false;
                        break;
                    }
                }
            } catch (const Error& e) {
                ok = false;
                why = e.what();
            }
            record(goal, ok, tag + (why.empty() ? "" : ": " + why));
        }
    }
    return report;
}

nlohmann::json to_json(const CorpusReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"checked", c.checked},
                          {"passed", c.passed},
                          {"ok", c.ok()},
                          {"failures", c.failures}});
    return {{"seed", report.seed}, {"programs", report.programs}, {"checks", checks}, {"passed", report.passed()}};
}

std::string to_text(const CorpusReport& report) {
    std::ostringstream os;
    os << "corpus seed " << report.seed << ", " << report.programs << " programs: "
       << (report.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& c : report.checks) {
        os << "  " << (c.ok() ? "ok  " : "FAIL") << ' ' << c.name << ' ' << c.passed << '/' << c.checked << '\n';
        for (const auto& f : c.failures) os << "       " << f << '\n';
    }
    return os.str();
}

} // namespace modsem
