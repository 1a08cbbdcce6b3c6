#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modsem/interpretation.hpp"
#include "modsem/syntax.hpp"

namespace modsem {

inline constexpr std::size_t default_max_atoms = std::size_t{1} << 16;

// The shared domain of a run: a constant set and a predicate set, with every
// predicate applied to every constant tuple materialized as an atom id.
class Universe {
public:
    // Constants and predicates are sorted and deduplicated. Throws
    // BudgetExceeded when the atom count would exceed max_atoms.
    Universe(std::set<std::string> constants, PredicateSet predicates,
             std::size_t max_atoms = default_max_atoms);

    std::size_t atom_count() const { return atom_count_; }
    const std::vector<std::string>& constants() const { return constants_; }
    const std::vector<PredicateSymbol>& predicates() const { return predicates_; }

    bool has_predicate(const PredicateSymbol& sym) const { return pred_index_.count(sym) != 0; }
    // Ground atom to id; nullopt when its predicate or a constant is unknown.
    std::optional<AtomId> find(const Atom& ground_atom) const;
    // Throws DomainError where find would return nullopt.
    AtomId id(const Atom& ground_atom) const;

    Atom atom(AtomId id) const;
    std::string render(AtomId id) const;
    const PredicateSymbol& predicate_of(AtomId id) const;

    // All atoms whose predicate is in `preds`.
    AtomSet atoms_of(const PredicateSet& preds) const;
    AtomSet empty_set() const { return AtomSet(atom_count_); }

private:
    std::vector<std::string> constants_;
    std::map<std::string, std::size_t> const_index_;
    std::vector<PredicateSymbol> predicates_;
    std::map<PredicateSymbol, std::size_t> pred_index_;
    std::vector<std::size_t> offsets_; // first atom id of each predicate
    std::size_t atom_count_ = 0;
};

struct GroundLiteral {
    bool positive = true;
    AtomId atom = 0;

    friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
};

struct GroundRule {
    AtomId head = 0;
    std::vector<GroundLiteral> body;

    friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

// gd(P) over a universe, together with def(P) at predicate and atom level.
class GroundModule {
public:
    GroundModule(std::shared_ptr<const Universe> universe, std::string name, std::vector<GroundRule> rules,
                 PredicateSet defines, PredicateSet body_predicates);

    const Universe& universe() const { return *universe_; }
    const std::shared_ptr<const Universe>& universe_ptr() const { return universe_; }
    const std::string& name() const { return name_; }
    const std::vector<GroundRule>& rules() const { return rules_; }
    const PredicateSet& defines() const { return defines_; }
    const PredicateSet& body_predicates() const { return body_predicates_; }
    // Atoms whose predicate is defined by this module.
    const AtomSet& defined_atoms() const { return defined_; }
    // Indices into rules() of the rules with the given head.
    const std::vector<std::size_t>& rules_for(AtomId head) const { return by_head_[head]; }
    bool definite() const { return definite_; }

private:
    std::shared_ptr<const Universe> universe_;
    std::string name_;
    std::vector<GroundRule> rules_;
    PredicateSet defines_;
    PredicateSet body_predicates_;
    AtomSet defined_;
    std::vector<std::vector<std::size_t>> by_head_;
    bool definite_ = true;
};

// Universe over every constant and predicate of the modules, plus extras.
// Throws SemanticError when some rule has variables but there are no constants.
std::shared_ptr<const Universe> build_universe(const std::vector<Module>& modules,
                                               const std::set<std::string>& extra_constants = {},
                                               const PredicateSet& extra_predicates = {},
                                               std::size_t max_atoms = default_max_atoms);

// All ground instances of the module's rules over the universe. Checks safety.
GroundModule ground_module(const Module& module, std::shared_ptr<const Universe> universe);

// Grounds each module against one shared universe.
std::vector<GroundModule> ground(const std::vector<Module>& modules,
                                 const std::set<std::string>& extra_constants = {},
                                 std::size_t max_atoms = default_max_atoms);

bool precedes(const GroundModule& p, const GroundModule& q);
GroundModule unite(const GroundModule& p, const GroundModule& q);
GroundModule unite(const std::vector<GroundModule>& modules);

} // namespace modsem
