#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modsem/grounding.hpp"
#include "modsem/semantics.hpp"

namespace modsem {

enum class EvalMode { modular, monolithic, compare };
enum class OutputFormat { text, json };

struct RunConfig {
    std::string command; // eval, compare, residualize, query, lab, corpus
    std::string source;  // program text for the program commands
    SemanticsKind semantics = SemanticsKind::well_founded;
    EvalMode mode = EvalMode::modular;
    std::string assume;  // start literals, e.g. "q, not r"
    std::string goal;    // query goal
    std::string module;  // residualize target
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 1;
    std::size_t count = 200;
    std::size_t max_atoms = default_max_atoms;
    std::vector<std::string> lattices; // lab: lemma census lattices (default menu when empty)
};

struct CommandResult {
    int exit_code = 0; // 0 success, 1 semantic or verification failure, 2 parse error
    std::string output;
    std::string error;
};

// Runs one command. Never throws; library errors become exit codes.
CommandResult execute(const RunConfig& config);

} // namespace modsem
