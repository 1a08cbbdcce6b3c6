#pragma once

#include <string>
#include <vector>

#include "modsem/grounding.hpp"
#include "modsem/interpretation.hpp"
#include "modsem/syntax.hpp"

namespace modsem {

enum class SemanticsKind { least_model, fitting, well_founded };

std::string to_string(SemanticsKind kind);
// Accepts lfp, least_model, fitting, wf, well_founded.
SemanticsKind semantics_from_name(const std::string& name);

// -- definite programs ------------------------------------------------------

// Heads in def(P) of rules whose bodies hold in I. Throws SemanticError when
// the module has a negative body literal.
AtomSet tp_apply(const GroundModule& p, const AtomSet& i);
// Closure of T_P+ from X: the least model of P extending X.
AtomSet tp_lfp(const GroundModule& p, const AtomSet& x);

// -- three-valued operators -------------------------------------------------
//
// I |= A iff A in I, I |= not A iff not-A in I, and a body is false in I iff
// one of its literals is. Every operator only produces literals over def(P).

// Three-valued immediate consequence: heads whose bodies are true in I.
AtomSet tp_apply_partial(const GroundModule& p, const SignedSet& i);

SignedSet fitting_raw(const GroundModule& p, const SignedSet& i);
PartialInterpretation fitting_apply(const GroundModule& p, const PartialInterpretation& i);
// Throws PreconditionError when J has literals over def(P).
PartialInterpretation fitting_lfp(const GroundModule& p, const PartialInterpretation& j);

// U_P(I): the greatest P,I-unfounded subset of def(P).
AtomSet greatest_unfounded(const GroundModule& p, const SignedSet& i);

// T_P(I) together with not-U_P(I); inconsistent for some I outside the
// well-founded iteration, hence the raw form.
SignedSet wp_raw(const GroundModule& p, const SignedSet& i);
// Throws UndefinedBound when T_P(I) and U_P(I) overlap.
PartialInterpretation wp_apply(const GroundModule& p, const PartialInterpretation& i);
// WF(P, J). Throws PreconditionError when J has literals over def(P).
PartialInterpretation wf(const GroundModule& p, const PartialInterpretation& j);

// -- evaluation -------------------------------------------------------------
//
// Results are literal sets. For least_model the set is positive only and every
// atom not in it is false.

// Throws PreconditionError unless `start` only mentions atoms outside def(P),
// and (for least_model) is positive.
void check_start(const GroundModule& p, const PartialInterpretation& start, SemanticsKind kind);

// Closure of the inflated operator of `kind` from `start`, without checking start.
PartialInterpretation evaluate(SemanticsKind kind, const GroundModule& p, const PartialInterpretation& start);

// Folds the per-module closure over a plan, innermost (most depended on) first.
// Throws PreconditionError when an earlier module calls a later one, when defines
// overlap, or when `start` mentions a defined atom.
PartialInterpretation modular_eval(const std::vector<GroundModule>& plan, const PartialInterpretation& start,
                                   SemanticsKind kind);
// Closure of the union of all modules.
PartialInterpretation monolithic_eval(const std::vector<GroundModule>& modules, const PartialInterpretation& start,
                                      SemanticsKind kind);

struct Comparison {
    PartialInterpretation modular;
    PartialInterpretation monolithic;
    bool equal = false;
};

Comparison compare_evaluations(const std::vector<GroundModule>& plan, const PartialInterpretation& start,
                               SemanticsKind kind);

// W+ for a module: I joined with W(I), as raw literal sets.
SignedSet wp_plus(const GroundModule& p, const SignedSet& i);

struct WInequalityReport {
    SignedSet union_plus;  // W+_{P+Q}(I)
    SignedSet staged;      // W+_P(W+_Q(I))
    SignedSet sum;         // W+_P(I) joined with W+_Q(I)
    SignedSet reversed;    // W+_Q(W+_P(I))
    bool union_below_staged = false;
    bool sum_below_union = false;
    bool reversed_equals_sum = false;
    // sum is strictly below union_plus, so W+_{P+Q} differs from W+_P + W+_Q.
    bool sum_strictly_below_union = false;

    bool holds() const { return union_below_staged && sum_below_union && reversed_equals_sum; }
};

// Throws PreconditionError unless P >> Q.
WInequalityReport check_w_inequalities(const GroundModule& p, const GroundModule& q, const SignedSet& i);

// A module whose semantics of `kind` is `model` on the atoms of `slice`:
//   least_model   true -> fact
//   fitting       true -> fact, undefined -> A :- A, false -> nothing
//   well_founded  true -> fact, false -> A :- A, undefined -> A :- not A
Module residualize(const PartialInterpretation& model, SemanticsKind kind, const Universe& universe,
                   const PredicateSet& slice, const std::string& name);

struct PartialEvalReport {
    Module residual;                  // QX
    PartialInterpretation original;   // closure of P+Q from X
    PartialInterpretation with_start; // closure of P+QX from X
    PartialInterpretation without_start; // closure of P+QX from the empty set
    bool equal = false;
};

// Evaluates Q from X, residualizes over every predicate outside def(P), and
// compares the three evaluations. Throws PreconditionError unless P >> Q and X
// is a valid start for P+Q.
PartialEvalReport partial_eval_check(const GroundModule& p, const GroundModule& q, const PartialInterpretation& x,
                                     SemanticsKind kind);

} // namespace modsem
