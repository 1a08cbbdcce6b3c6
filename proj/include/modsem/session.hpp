#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "modsem/grounding.hpp"
#include "modsem/semantics.hpp"
#include "modsem/syntax.hpp"

namespace modsem {

// A set of modules grounded over one shared universe.
class Session {
public:
    // `mentioned` literals contribute their constants and predicates to the
    // universe (start-element assumptions, goals).
    explicit Session(std::vector<Module> modules, const std::vector<Literal>& mentioned = {},
                     const std::set<std::string>& extra_constants = {}, std::size_t max_atoms = default_max_atoms);

    const std::vector<Module>& modules() const { return modules_; }
    const std::vector<GroundModule>& grounded() const { return grounded_; }
    const Universe& universe() const { return *universe_; }
    const std::shared_ptr<const Universe>& universe_ptr() const { return universe_; }

    const GroundModule& module(const std::string& name) const;
    std::vector<GroundModule> ground_plan(const Plan& plan) const;
    GroundModule ground_union() const;

    // Ground literals as a start element. Throws PreconditionError when a
    // literal is not ground or its predicate is defined by some module, and
    // UndefinedBound when the literals are contradictory.
    PartialInterpretation start(const std::vector<Literal>& literals) const;

private:
    std::vector<Module> modules_;
    std::shared_ptr<const Universe> universe_;
    std::vector<GroundModule> grounded_;
};

struct Answer {
    std::vector<std::string> values; // one constant per goal variable
};

struct QueryResult {
    std::vector<std::string> variables;
    std::vector<Answer> answers;   // substitutions making the goal true
    std::vector<Answer> undefined; // three-valued semantics only
};

// Evaluates the union of `modules` with { answer(vars) :- goal } and reads
// the answer atoms back as substitutions.
QueryResult run_query(const std::vector<Module>& modules, const std::vector<Literal>& goal, SemanticsKind kind,
                      const std::vector<Literal>& assumptions = {}, std::size_t max_atoms = default_max_atoms);

// Atom names sorted lexicographically.
std::vector<std::string> render_atoms(const Universe& universe, const AtomSet& atoms);

struct ModelView {
    std::vector<std::string> true_atoms;
    std::vector<std::string> false_atoms;
    std::vector<std::string> undefined_atoms;
};

// least_model results are two-valued: every atom not true is false.
ModelView view_model(const Universe& universe, const PartialInterpretation& model, SemanticsKind kind);

nlohmann::json to_json(const ModelView& view);

} // namespace modsem
