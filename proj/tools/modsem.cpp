#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modsem/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular fixedpoint semantics for logic programs"};
    app.require_subcommand(1);

    modsem::RunConfig config;
    std::string file, semantics = "wf", mode = "modular", format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-atoms", config.max_atoms, "Upper bound on the ground atom universe");
    };
    auto add_program = [&](CLI::App* sub) {
        sub->add_option("file", file, "Program file")->required()->check(CLI::ExistingFile);
        sub->add_option("--semantics", semantics, "lfp, fitting or wf")
            ->check(CLI::IsMember({"lfp", "least_model", "fitting", "wf", "well_founded"}));
        sub->add_option("--assume", config.assume, "Start literals over undefined predicates, e.g. \"q, not r\"");
        add_common(sub);
    };

    auto* eval = app.add_subcommand("eval", "Evaluate a program");
    add_program(eval);
    eval->add_option("--mode", mode, "modular, monolithic or compare")
        ->check(CLI::IsMember({"modular", "monolithic", "compare"}));

    auto* compare = app.add_subcommand("compare", "Compare modular and monolithic evaluation");
    add_program(compare);

    auto* residualize = app.add_subcommand("residualize", "Replace a module and its callees by a residual program");
    add_program(residualize);
    residualize->add_option("--module", config.module, "Module to residualize")->required();

    auto* query = app.add_subcommand("query", "Answer a goal");
    add_program(query);
    query->add_option("--goal", config.goal, "Goal literals, e.g. \"path(1,Y)\"")->required();

    auto* lab = app.add_subcommand("lab", "Run the closure-law censuses and counterexamples");
    add_common(lab);
    lab->add_option("--lattice", config.lattices, "Lattices for the lemma census, e.g. chain(3) boolean(2)");

    auto* corpus = app.add_subcommand("corpus", "Run the randomized modular-equivalence suite");
    add_common(corpus);
    corpus->add_option("--seed", config.seed, "Corpus seed");
    corpus->add_option("--count", config.count, "Number of programs")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.mode = mode == "monolithic" ? modsem::EvalMode::monolithic
                  : mode == "compare"  ? modsem::EvalMode::compare
                                       : modsem::EvalMode::modular;
    config.format = format == "json" ? modsem::OutputFormat::json : modsem::OutputFormat::text;
    config.semantics = modsem::semantics_from_name(semantics);
    if (!file.empty()) {
        try {
            config.source = read_file(file);
        } catch (const std::exception& e) {
            std::cerr << e.what() << '\n';
            return 1;
        }
    }

    const auto result = modsem::execute(config);
    std::cout << result.output;
    std::cerr << result.error;
    return result.exit_code;
}
