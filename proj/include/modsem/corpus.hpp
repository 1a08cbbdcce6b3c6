#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "modsem/syntax.hpp"

namespace modsem {

// A random two-module program with upper >> lower: `lower` only uses base and
// its own predicates, `upper` may use base, lower and its own predicates.
// At most 6 predicates, 12 rules and 4 constants.
struct CorpusProgram {
    std::uint64_t seed = 0;
    std::set<std::string> constants;
    PredicateSet base;  // defined by neither module
    Module lower;
    Module upper;
    std::vector<Literal> start; // ground literals over base predicates
    std::vector<Literal> goal;
};

// Deterministic for a given seed. Without negation both modules are definite
// and the start literals are positive.
CorpusProgram generate_program(std::uint64_t seed, bool allow_negation);

struct CorpusCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures; // first few, for diagnosis

    bool ok() const { return checked == passed; }
};

struct CorpusOptions {
    std::size_t programs = 200;
    std::size_t monotonicity_pairs = 200; // per program and operator
    std::size_t goal_programs = 20;
    std::size_t samples = 20;             // interpretations per program for the W and U checks
};

struct CorpusReport {
    std::uint64_t seed = 0;
    std::size_t programs = 0;
    std::vector<CorpusCheck> checks;

    bool passed() const;
    const CorpusCheck& check(const std::string& name) const;
};

// Checks, each over every program unless noted:
//   modular_<kind>         modular evaluation equals monolithic evaluation
//   partial_eval_<kind>    evaluation with the residual of the lower module agrees
//   monotone_tp / monotone_fitting / monotone_wp   on sampled ordered pairs
//   goal_wrapper           first `goal_programs` programs, all substitutions
//   fitting_below_wf       Fitting model is contained in the well-founded model
//   w_inequalities         the W+ bounds for upper >> lower at sampled points
//   unfounded_extension    U_P(I + J) contains U_P(I) for J outside def(P)
CorpusReport run_corpus(std::uint64_t seed, const CorpusOptions& options = {});

nlohmann::json to_json(const CorpusReport& report);
std::string to_text(const CorpusReport& report);

} // namespace modsem
