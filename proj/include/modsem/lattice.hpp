#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace modsem {

// Elements of an explicit finite order are identified by their index in the carrier.
using Element = std::size_t;

// A finite partial order stored as a dense leq table. Joins and meets are
// precomputed wherever they exist, so a poset that happens to be a lattice
// answers join/meet in O(1).
class FinitePoset {
public:
    // leq[x][y] is true iff x <= y. Throws DomainError if the relation is not a
    // partial order or the table shape does not match the labels.
    FinitePoset(std::string name, std::vector<std::string> labels,
                std::vector<std::vector<bool>> leq);

    const std::string& name() const { return name_; }
    std::size_t size() const { return labels_.size(); }
    const std::string& label(Element x) const;
    std::optional<Element> find(const std::string& label) const;

    bool leq(Element x, Element y) const;
    bool lt(Element x, Element y) const { return x != y && leq(x, y); }

    std::optional<Element> try_join(Element x, Element y) const;
    std::optional<Element> try_meet(Element x, Element y) const;
    // Throw UndefinedBound when the bound does not exist.
    Element join(Element x, Element y) const;
    Element meet(Element x, Element y) const;

    std::optional<Element> least() const { return least_; }
    std::optional<Element> greatest() const { return greatest_; }

    // Every pair has a join and a meet, and the carrier is nonempty.
    bool is_lattice() const;

    void check(Element x) const;

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
        return a.labels_ == b.labels_ && a.leq_ == b.leq_;
    }

private:
    static constexpr Element npos = std::numeric_limits<Element>::max();

    std::size_t index(Element x, Element y) const { return x * labels_.size() + y; }

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<char> leq_;
    std::vector<Element> join_;
    std::vector<Element> meet_;
    std::optional<Element> least_;
    std::optional<Element> greatest_;
};

// A finite poset in which every pair has a join and a meet. Finite lattices are
// complete, hence complete partial orders.
class FiniteLattice : public FinitePoset {
public:
    // Throws DomainError unless the poset is a nonempty lattice.
    explicit FiniteLattice(FinitePoset poset);

    Element bottom() const { return *least(); }
    Element top() const { return *greatest(); }
};

// Subsets of a small label set, each represented as a bit mask. No tables are
// materialized, so the carrier may be far larger than any explicit lattice.
class PowersetLattice {
public:
    using Mask = std::uint32_t;
    static constexpr std::size_t max_labels = 20;

    // Throws BudgetExceeded beyond max_labels, DomainError on duplicate labels.
    explicit PowersetLattice(std::vector<std::string> universe);

    const std::vector<std::string>& universe() const { return universe_; }
    std::size_t size() const { return std::size_t{1} << universe_.size(); }

    Mask bottom() const { return 0; }
    Mask top() const { return static_cast<Mask>(size() - 1); }

    bool leq(Mask x, Mask y) const;
    Mask join(Mask x, Mask y) const;
    Mask meet(Mask x, Mask y) const;

    // Mask for a set of labels; throws DomainError on unknown labels.
    Mask element(const std::vector<std::string>& labels) const;
    // "{a,b}" style rendering, labels in universe order.
    std::string render(Mask x) const;

    // Explicit table form with element index == mask. Limited to 6 labels.
    FiniteLattice to_lattice(std::string name) const;

private:
    void check(Mask x) const;

    std::vector<std::string> universe_;
};

PowersetLattice make_powerset_lattice(std::vector<std::string> universe);

enum class BuiltinKind { chain, boolean, appendix_chain };

// Largest n accepted by make_builtin for chain(n) and boolean(n).
inline constexpr std::size_t max_chain_length = 64;
inline constexpr std::size_t max_boolean_rank = 6;

// chain(n): 0 < 1 < ... < n-1.  boolean(n): subsets of the first n letters,
// element index == bit mask.  appendix_chain: 1 < 2 < 3 (n is ignored).
FiniteLattice make_builtin(BuiltinKind kind, std::size_t n = 0);

// Parses "chain(4)", "boolean(2)", "appendix_chain".
FiniteLattice builtin_from_name(const std::string& name);

} // namespace modsem
