#include "modsem/session.hpp"

#include <algorithm>

#include "modsem/errors.hpp"

namespace modsem {

Session::Session(std::vector<Module> modules, const std::vector<Literal>& mentioned,
                 const std::set<std::string>& extra_constants, std::size_t max_atoms)
    : modules_(std::move(modules)) {
    std::set<std::string> constants = extra_constants;
    PredicateSet preds;
    for (const auto& l : mentioned) {
        preds.insert(l.atom.symbol());
        for (const auto& t : l.atom.args)
            if (!t.is_variable()) constants.insert(t.name);
    }
    universe_ = build_universe(modules_, constants, preds, max_atoms);
    for (const auto& m : modules_) grounded_.push_back(ground_module(m, universe_));
}

const GroundModule& Session::module(const std::string& name) const {
    for (const auto& g : grounded_)
        if (g.name() == name) return g;
    throw SemanticError("no module named " + name);
}

std::vector<GroundModule> Session::ground_plan(const Plan& plan) const {
    std::vector<GroundModule> out;
    for (const auto& m : plan.order) out.push_back(module(m.name()));
    return out;
}

GroundModule Session::ground_union() const {
    if (grounded_.empty())
        return GroundModule(universe_, "empty", {}, {}, {});
    return unite(grounded_);
}

PartialInterpretation Session::start(const std::vector<Literal>& literals) const {
    SignedSet s(universe_->atom_count());
    for (const auto& l : literals) {
        if (!l.atom.is_ground()) throw PreconditionError("start literal " + to_string(l) + " is not ground");
        for (const auto& m : modules_)
            if (m.defines().count(l.atom.symbol()))
                throw PreconditionError("start literal " + to_string(l) + " mentions " + to_string(l.atom.symbol()) +
                                        ", which module " + m.name() + " defines");
        const AtomId a = universe_->id(l.atom);
        (l.positive ? s.pos : s.neg).set(a);
    }
    if (!s.consistent()) throw UndefinedBound("contradictory start literals");
    return PartialInterpretation(std::move(s));
}

QueryResult run_query(const std::vector<Module>& modules, const std::vector<Literal>& goal, SemanticsKind kind,
                      const std::vector<Literal>& assumptions, std::size_t max_atoms) {
    PredicateSet existing;
    for (const auto& m : modules) {
        auto p = m.predicates();
        existing.insert(p.begin(), p.end());
    }
    for (const auto& l : goal) existing.insert(l.atom.symbol());
    for (const auto& l : assumptions) existing.insert(l.atom.symbol());

    std::vector<Module> all = modules;
    all.push_back(wrap_goal(goal, existing));
    const PredicateSymbol answer = *all.back().defines().begin();

    std::vector<Literal> mentioned = assumptions;
    mentioned.insert(mentioned.end(), goal.begin(), goal.end());
    const Session session(std::move(all), mentioned, {}, max_atoms);
    const auto start = session.start(assumptions);
    const auto model = monolithic_eval(session.grounded(), start, kind);

    QueryResult r;
    r.variables = variables_of(goal);
    const AtomSet answers = session.universe().atoms_of({answer});
    for (auto a = answers.find_first(); a != AtomSet::npos; a = answers.find_next(a)) {
        Answer ans;
        for (const auto& t : session.universe().atom(a).args) ans.values.push_back(t.name);
        if (model.is_true(a)) r.answers.push_back(std::move(ans));
        else if (kind != SemanticsKind::least_model && !model.is_false(a)) r.undefined.push_back(std::move(ans));
    }
    return r;
}

std::vector<std::string> render_atoms(const Universe& universe, const AtomSet& atoms) {
    std::vector<std::string> out;
    for (auto a = atoms.find_first(); a != AtomSet::npos; a = atoms.find_next(a)) out.push_back(universe.render(a));
    std::sort(out.begin(), out.end());
    return out;
}

ModelView view_model(const Universe& universe, const PartialInterpretation& model, SemanticsKind kind) {
    ModelView v;
    v.true_atoms = render_atoms(universe, model.true_atoms());
    if (kind == SemanticsKind::least_model) {
        v.false_atoms = render_atoms(universe, ~model.true_atoms());
    } else {
        v.false_atoms = render_atoms(universe, model.false_atoms());
        v.undefined_atoms = render_atoms(universe, model.undefined_atoms());
    }
    return v;
}

nlohmann::json to_json(const ModelView& view) {
    return {{"true", view.true_atoms}, {"false", view.false_atoms}, {"undefined", view.undefined_atoms}};
}

} // namespace modsem
