#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modsem/lattice.hpp"

namespace modsem {

// A total self-map on a finite poset, stored as a table indexed by element.
class EndoFunction {
public:
    EndoFunction(std::shared_ptr<const FinitePoset> domain, std::vector<Element> table);

    static EndoFunction identity(std::shared_ptr<const FinitePoset> domain);
    static EndoFunction constant(std::shared_ptr<const FinitePoset> domain, Element value);
    static EndoFunction tabulate(std::shared_ptr<const FinitePoset> domain,
                                 const std::function<Element(Element)>& fn);

    Element operator()(Element x) const;

    const FinitePoset& domain() const { return *domain_; }
    const std::shared_ptr<const FinitePoset>& domain_ptr() const { return domain_; }
    const std::vector<Element>& table() const { return table_; }

    // "1->1 2->1 3->3" using element labels.
    std::string render() const;

    friend bool operator==(const EndoFunction& a, const EndoFunction& b) {
        return a.table_ == b.table_ && (a.domain_ == b.domain_ || *a.domain_ == *b.domain_);
    }

private:
    std::shared_ptr<const FinitePoset> domain_;
    std::vector<Element> table_;
};

// Throws DomainError unless f and g act on the same carrier.
void require_same_domain(const EndoFunction& f, const EndoFunction& g);

// f <= g pointwise.
bool pointwise_leq(const EndoFunction& f, const EndoFunction& g);

// (f + g)(x) = f(x) join g(x). Throws UndefinedBound if some join is missing.
EndoFunction plus(const EndoFunction& f, const EndoFunction& g);
// Pointwise meet, the dual of plus.
EndoFunction dual_plus(const EndoFunction& f, const EndoFunction& g);
// x -> f(g(x)).
EndoFunction compose(const EndoFunction& f, const EndoFunction& g);
// f+(x) = f(x) join x: the least increasing function above f.
EndoFunction inflate(const EndoFunction& f);

// f*(x): iterate y -> y join f(y) from x until stable.
Element star(const EndoFunction& f, Element x);
// f* as a function.
EndoFunction star(const EndoFunction& f);

// Least fixedpoint of f above x. Throws PreconditionError when x is not below f(x).
Element lfp_from(const EndoFunction& f, Element x);

// Downward closure: iterate y -> y meet f(y) from x until stable.
Element down_closure(const EndoFunction& f, Element x);
EndoFunction down_closure(const EndoFunction& f);

struct FunctionProperties {
    bool monotone = false;
    bool increasing = false;
    bool decreasing = false;
    // On a finite carrier every chain is finite, so this equals `monotone`.
    bool continuous = false;
};

FunctionProperties classify(const EndoFunction& f);

struct FixedpointSets {
    std::vector<Element> pre;   // f(x) <= x
    std::vector<Element> post;  // x <= f(x)
    std::vector<Element> fixed; // f(x) == x
};

FixedpointSets fixedpoint_sets(const EndoFunction& f);

// Outcome of one numbered part of a law: whether its hypothesis held, whether
// its conclusion held, and the first element at which the conclusion failed.
struct PartVerdict {
    bool hypothesis = false;
    bool conclusion = false;
    std::optional<Element> witness;

    bool violated() const { return hypothesis && !conclusion; }
};

// Closure laws for a pair of monotone increasing functions.
//   1. (f+g)* = (f.g)* = (g.f)*                         (no hypothesis)
//   2. f*.g >= g.f*              => (f+g)* = (f.g)* = f*.g*
//   3. g continuous, f.g >= g.f  => same conclusion
//   4. g continuous, f.g* >= g*.f => same conclusion
struct LemmaVerdict {
    std::array<PartVerdict, 4> parts;

    bool theorem_holds() const;
};

// Throws PreconditionError unless f and g are monotone and increasing.
LemmaVerdict check_lemma(const EndoFunction& f, const EndoFunction& g);

// Laws for a function g sandwiched between f1 and f2 (f1 <= g <= f2 pointwise):
//   1. PRE(f1) = PRE(f2)                 => PRE(g) = PRE(f1) = PRE(f2)
//   2. POST(f1) = POST(f2)               => POST(g) = POST(f1) = POST(f2)
//   3. PRE and FPT of f1, f2 agree       => FPT(g) = FPT(f1) = FPT(f2)
//   4. POST and FPT of f1, f2 agree      => same
//   5. PRE and POST of f1, f2 agree      => same
//   6. FPT(f1) = FPT(f2)                 => FPT(g) contains FPT(f1)
struct SandwichVerdict {
    std::array<PartVerdict, 6> parts;
    FixedpointSets lower;
    FixedpointSets middle;
    FixedpointSets upper;
    // Part 6 holds with FPT(g) strictly larger than FPT(f1) = FPT(f2).
    bool strict_part6 = false;

    bool theorem_holds() const;
};

// Throws PreconditionError (naming the element) unless f1 <= g <= f2 pointwise.
SandwichVerdict check_sandwich(const EndoFunction& f1, const EndoFunction& g, const EndoFunction& f2);

struct CommonFixedpointReport {
    bool holds = false;
    std::vector<Element> common;
    // First element on which the four fixedpoint sets disagree.
    std::optional<Element> witness;
};

// For increasing f and g: FPT(f) & FPT(g) = FPT(f.g) = FPT(g.f) = FPT(f+g).
// Throws PreconditionError when f or g is not increasing.
CommonFixedpointReport common_fixedpoints_check(const EndoFunction& f, const EndoFunction& g);

} // namespace modsem
