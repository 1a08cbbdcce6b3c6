#pragma once

#include <cstddef>
#include <optional>

#include <boost/dynamic_bitset.hpp>

namespace modsem {

using AtomId = std::size_t;
// A set of ground atoms over a materialized universe, one bit per atom.
using AtomSet = boost::dynamic_bitset<>;

// Positive and negative literals over a universe. May be inconsistent; the
// intermediate values of the operator identity checks need that freedom.
struct SignedSet {
    AtomSet pos;
    AtomSet neg;

    SignedSet() = default;
    explicit SignedSet(std::size_t atoms) : pos(atoms), neg(atoms) {}
    SignedSet(AtomSet p, AtomSet n) : pos(std::move(p)), neg(std::move(n)) {}

    std::size_t universe_size() const { return pos.size(); }
    bool consistent() const { return !pos.intersects(neg); }
    bool subset_of(const SignedSet& other) const {
        return pos.is_subset_of(other.pos) && neg.is_subset_of(other.neg);
    }
    SignedSet united(const SignedSet& other) const { return {pos | other.pos, neg | other.neg}; }

    friend bool operator==(const SignedSet&, const SignedSet&) = default;
};

// A consistent set of ground literals: the three-valued interpretation in which
// A is true iff A is in the set, false iff not-A is, and undefined otherwise.
class PartialInterpretation {
public:
    PartialInterpretation() = default;
    explicit PartialInterpretation(std::size_t atoms) : literals_(atoms) {}
    // Throws UndefinedBound when some atom occurs with both signs.
    explicit PartialInterpretation(SignedSet literals);

    std::size_t universe_size() const { return literals_.universe_size(); }
    const SignedSet& literals() const { return literals_; }
    const AtomSet& true_atoms() const { return literals_.pos; }
    const AtomSet& false_atoms() const { return literals_.neg; }
    AtomSet undefined_atoms() const { return ~(literals_.pos | literals_.neg); }

    bool is_true(AtomId a) const { return literals_.pos.test(a); }
    bool is_false(AtomId a) const { return literals_.neg.test(a); }

    friend bool operator==(const PartialInterpretation&, const PartialInterpretation&) = default;

private:
    SignedSet literals_;
};

// Subsets of an atom universe ordered by inclusion. The domain of T_P.
class InclusionOrder {
public:
    explicit InclusionOrder(std::size_t atoms) : atoms_(atoms) {}

    std::size_t atom_count() const { return atoms_; }
    AtomSet bottom() const { return AtomSet(atoms_); }
    bool leq(const AtomSet& x, const AtomSet& y) const;
    AtomSet join(const AtomSet& x, const AtomSet& y) const;
    AtomSet meet(const AtomSet& x, const AtomSet& y) const;

private:
    void check(const AtomSet& x) const;

    std::size_t atoms_;
};

// Consistent literal sets ordered by inclusion (the definedness ordering).
// Not a lattice: the union of {p} and {not p} has no upper bound.
class LiteralPoset {
public:
    explicit LiteralPoset(std::size_t atoms) : atoms_(atoms) {}

    std::size_t atom_count() const { return atoms_; }
    PartialInterpretation bottom() const { return PartialInterpretation(atoms_); }
    bool leq(const PartialInterpretation& x, const PartialInterpretation& y) const;
    std::optional<PartialInterpretation> try_join(const PartialInterpretation& x,
                                                  const PartialInterpretation& y) const;
    // Throws UndefinedBound when the union is inconsistent.
    PartialInterpretation join(const PartialInterpretation& x, const PartialInterpretation& y) const;
    PartialInterpretation meet(const PartialInterpretation& x, const PartialInterpretation& y) const;

private:
    void check(const PartialInterpretation& x) const;

    std::size_t atoms_;
};

} // namespace modsem
