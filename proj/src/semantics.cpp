#include "modsem/semantics.hpp"

#include <algorithm>

#include "modsem/closure.hpp"
#include "modsem/errors.hpp"

namespace modsem {

std::string to_string(SemanticsKind kind) {
    switch (kind) {
    case SemanticsKind::least_model: return "least_model";
    case SemanticsKind::fitting: return "fitting";
    case SemanticsKind::well_founded: return "well_founded";
    }
    return "unknown";
}

SemanticsKind semantics_from_name(const std::string& name) {
    if (name == "lfp" || name == "least_model") return SemanticsKind::least_model;
    if (name == "fitting") return SemanticsKind::fitting;
    if (name == "wf" || name == "well_founded") return SemanticsKind::well_founded;
    throw DomainError("unknown semantics '" + name + "' (expected lfp, fitting or wf)");
}

namespace {

bool literal_true(const GroundLiteral& l, const SignedSet& i) {
    return l.positive ? i.pos.test(l.atom) : i.neg.test(l.atom);
}

bool literal_false(const GroundLiteral& l, const SignedSet& i) {
    return l.positive ? i.neg.test(l.atom) : i.pos.test(l.atom);
}

void check_universe(const GroundModule& p, std::size_t size) {
    if (size != p.universe().atom_count())
        throw DomainError("interpretation and module " + p.name() + " use different universes");
}

// Longest strictly increasing chain of literal sets over n atoms has n steps.
std::size_t iteration_bound(const GroundModule& p) { return p.universe().atom_count() + 1; }

} // namespace

AtomSet tp_apply(const GroundModule& p, const AtomSet& i) {
    check_universe(p, i.size());
    if (!p.definite())
        throw SemanticError("module " + p.name() + " has negative literals; use fitting or well_founded semantics");
    AtomSet out(i.size());
    for (const auto& r : p.rules()) {
        if (out.test(r.head)) continue;
        if (std::all_of(r.body.begin(), r.body.end(), [&](const GroundLiteral& l) { return i.test(l.atom); }))
            out.set(r.head);
    }
    return out;
}

AtomSet tp_lfp(const GroundModule& p, const AtomSet& x) {
    return iterate_to_stability(x, [&](const AtomSet& y) { return y | tp_apply(p, y); }, iteration_bound(p), "tp_lfp");
}

AtomSet tp_apply_partial(const GroundModule& p, const SignedSet& i) {
    check_universe(p, i.universe_size());
    AtomSet out(i.universe_size());
    for (const auto& r : p.rules()) {
        if (out.test(r.head)) continue;
        if (std::all_of(r.body.begin(), r.body.end(), [&](const GroundLiteral& l) { return literal_true(l, i); }))
            out.set(r.head);
    }
    return out;
}

SignedSet fitting_raw(const GroundModule& p, const SignedSet& i) {
    SignedSet out(tp_apply_partial(p, i), AtomSet(i.universe_size()));
    const auto& defined = p.defined_atoms();
    for (auto a = defined.find_first(); a != AtomSet::npos; a = defined.find_next(a)) {
        const auto& rules = p.rules_for(a);
        const bool all_false = std::all_of(rules.begin(), rules.end(), [&](std::size_t k) {
            const auto& body = p.rules()[k].body;
            return std::any_of(body.begin(), body.end(), [&](const GroundLiteral& l) { return literal_false(l, i); });
        });
        if (all_false) out.neg.set(a);
    }
    return out;
}

PartialInterpretation fitting_apply(const GroundModule& p, const PartialInterpretation& i) {
    // Consistent by construction for consistent I; the constructor re-checks.
    return PartialInterpretation(fitting_raw(p, i.literals()));
}

AtomSet greatest_unfounded(const GroundModule& p, const SignedSet& i) {
    check_universe(p, i.universe_size());
    AtomSet u = p.defined_atoms();
    const std::size_t bound = u.count() + 1;
    for (std::size_t round = 0; round <= bound; ++round) {
        bool changed = false;
        for (auto a = u.find_first(); a != AtomSet::npos; a = u.find_next(a)) {
            for (std::size_t k : p.rules_for(a)) {
                const auto& body = p.rules()[k].body;
                const bool blocked = std::any_of(body.begin(), body.end(), [&](const GroundLiteral& l) {
                    return literal_false(l, i) || (l.positive && u.test(l.atom));
                });
                if (!blocked) {
                    u.reset(a);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) return u;
    }
    throw IterationLimit("greatest_unfounded did not stabilize");
}

SignedSet wp_raw(const GroundModule& p, const SignedSet& i) {
    return SignedSet(tp_apply_partial(p, i), greatest_unfounded(p, i));
}

PartialInterpretation wp_apply(const GroundModule& p, const PartialInterpretation& i) {
    return PartialInterpretation(wp_raw(p, i.literals()));
}

SignedSet wp_plus(const GroundModule& p, const SignedSet& i) { return i.united(wp_raw(p, i)); }

void check_start(const GroundModule& p, const PartialInterpretation& start, SemanticsKind kind) {
    check_universe(p, start.universe_size());
    const auto& lits = start.literals();
    const auto& defined = p.defined_atoms();
    const AtomSet clash = (lits.pos | lits.neg) & defined;
    if (clash.any())
        throw PreconditionError("start element mentions " + p.universe().render(clash.find_first()) +
                                ", which is defined by " + p.name());
    if (kind == SemanticsKind::least_model && lits.neg.any())
        throw PreconditionError("least_model start elements are atom sets; got not " +
                                p.universe().render(lits.neg.find_first()));
}

PartialInterpretation fitting_lfp(const GroundModule& p, const PartialInterpretation& j) {
    check_start(p, j, SemanticsKind::fitting);
    return evaluate(SemanticsKind::fitting, p, j);
}

PartialInterpretation wf(const GroundModule& p, const PartialInterpretation& j) {
    check_start(p, j, SemanticsKind::well_founded);
    return evaluate(SemanticsKind::well_founded, p, j);
}

PartialInterpretation evaluate(SemanticsKind kind, const GroundModule& p, const PartialInterpretation& start) {
    check_universe(p, start.universe_size());
    const std::size_t bound = iteration_bound(p);
    switch (kind) {
    case SemanticsKind::least_model: {
        if (start.false_atoms().any()) throw PreconditionError("least_model start elements are atom sets");
        AtomSet model = tp_lfp(p, start.true_atoms());
        return PartialInterpretation(SignedSet(std::move(model), AtomSet(start.universe_size())));
    }
    case SemanticsKind::fitting:
        return iterate_to_stability(
            start, [&](const PartialInterpretation& y) { return PartialInterpretation(y.literals().united(fitting_raw(p, y.literals()))); },
            bound, "fitting_lfp");
    case SemanticsKind::well_founded:
        return iterate_to_stability(
            start, [&](const PartialInterpretation& y) { return PartialInterpretation(wp_plus(p, y.literals())); },
            bound, "wf");
    }
    throw DomainError("unknown semantics kind");
}

PartialInterpretation modular_eval(const std::vector<GroundModule>& plan, const PartialInterpretation& start,
                                   SemanticsKind kind) {
    for (std::size_t i = 0; i < plan.size(); ++i) {
        if (plan[i].universe_ptr() != plan.front().universe_ptr())
            throw DomainError("plan modules were grounded over different universes");
        for (std::size_t j = i + 1; j < plan.size(); ++j) {
            if (plan[i].defined_atoms().intersects(plan[j].defined_atoms()))
                throw PreconditionError("plan modules " + plan[i].name() + " and " + plan[j].name() +
                                        " define a common predicate");
            if (!precedes(plan[j], plan[i]))
                throw PreconditionError("invalid plan: " + plan[i].name() + " calls " + plan[j].name() +
                                        ", which comes later");
        }
        check_start(plan[i], start, kind);
    }
    PartialInterpretation current = start;
    for (const auto& m : plan) current = evaluate(kind, m, current);
    return current;
}

PartialInterpretation monolithic_eval(const std::vector<GroundModule>& modules, const PartialInterpretation& start,
                                      SemanticsKind kind) {
    const GroundModule all = unite(modules);
    check_start(all, start, kind);
    return evaluate(kind, all, start);
}

Comparison compare_evaluations(const std::vector<GroundModule>& plan, const PartialInterpretation& start,
                               SemanticsKind kind) {
    Comparison c{modular_eval(plan, start, kind), monolithic_eval(plan, start, kind), false};
    c.equal = c.modular == c.monolithic;
    return c;
}

WInequalityReport check_w_inequalities(const GroundModule& p, const GroundModule& q, const SignedSet& i) {
    if (!precedes(p, q))
        throw PreconditionError("check_w_inequalities: " + p.name() + " >> " + q.name() + " does not hold");
    const GroundModule pq = unite(p, q);
    WInequalityReport r;
    r.union_plus = wp_plus(pq, i);
    r.staged = wp_plus(p, wp_plus(q, i));
    r.sum = wp_plus(p, i).united(wp_plus(q, i));
    r.reversed = wp_plus(q, wp_plus(p, i));
    r.union_below_staged = r.union_plus.subset_of(r.staged);
    r.sum_below_union = r.sum.subset_of(r.union_plus);
    r.reversed_equals_sum = r.reversed == r.sum;
    r.sum_strictly_below_union = r.sum_below_union && !(r.sum == r.union_plus);
    return r;
}

Module residualize(const PartialInterpretation& model, SemanticsKind kind, const Universe& universe,
                   const PredicateSet& slice, const std::string& name) {
    if (model.universe_size() != universe.atom_count())
        throw DomainError("model and universe sizes differ");
    std::vector<Rule> rules;
    const AtomSet atoms = universe.atoms_of(slice);
    for (auto a = atoms.find_first(); a != AtomSet::npos; a = atoms.find_next(a)) {
        const Atom atom = universe.atom(a);
        const bool t = model.is_true(a);
        const bool f = model.is_false(a);
        if (t) {
            rules.push_back({atom, {}});
            continue;
        }
        switch (kind) {
        case SemanticsKind::least_model:
            break;
        case SemanticsKind::fitting:
            if (!f) rules.push_back({atom, {{true, atom}}});
            break;
        case SemanticsKind::well_founded:
            rules.push_back({atom, {{f, atom}}});
            break;
        }
    }
    return Module(name, std::move(rules), slice);
}

PartialEvalReport partial_eval_check(const GroundModule& p, const GroundModule& q, const PartialInterpretation& x,
                                     SemanticsKind kind) {
    if (!precedes(p, q))
        throw PreconditionError("partial_eval_check: " + p.name() + " >> " + q.name() + " does not hold");
    const GroundModule pq = unite(p, q);
    check_start(pq, x, kind);

    const auto& universe = p.universe();
    PredicateSet slice;
    for (const auto& sym : universe.predicates())
        if (!p.defines().count(sym)) slice.insert(sym);

    const PartialInterpretation q_model = evaluate(kind, q, x);
    PartialEvalReport r{residualize(q_model, kind, universe, slice, q.name() + "_residual"), {}, {}, {}, false};
    const GroundModule pqx = unite(p, ground_module(r.residual, p.universe_ptr()));

    r.original = evaluate(kind, pq, x);
    r.with_start = evaluate(kind, pqx, x);
    r.without_start = evaluate(kind, pqx, PartialInterpretation(universe.atom_count()));
    r.equal = r.original == r.with_start && r.with_start == r.without_start;
    return r;
}

} // namespace modsem
