#include "modsem/grounding.hpp"

#include <algorithm>

#include "modsem/errors.hpp"

namespace modsem {

Universe::Universe(std::set<std::string> constants, PredicateSet predicates, std::size_t max_atoms)
    : constants_(constants.begin(), constants.end()), predicates_(predicates.begin(), predicates.end()) {
    for (std::size_t i = 0; i < constants_.size(); ++i) const_index_[constants_[i]] = i;
    for (std::size_t p = 0; p < predicates_.size(); ++p) {
        pred_index_[predicates_[p]] = p;
        offsets_.push_back(atom_count_);
        std::size_t tuples = 1;
        for (std::size_t k = 0; k < predicates_[p].arity; ++k) {
            tuples *= constants_.size();
            if (tuples > max_atoms) break;
        }
        atom_count_ += tuples;
        if (atom_count_ > max_atoms)
            throw BudgetExceeded("atom universe exceeds " + std::to_string(max_atoms) + " atoms");
    }
}

std::optional<AtomId> Universe::find(const Atom& a) const {
    auto p = pred_index_.find(a.symbol());
    if (p == pred_index_.end()) return std::nullopt;
    std::size_t tuple = 0;
    for (const auto& t : a.args) {
        if (t.is_variable()) return std::nullopt;
        auto c = const_index_.find(t.name);
        if (c == const_index_.end()) return std::nullopt;
        tuple = tuple * constants_.size() + c->second;
    }
    return offsets_[p->second] + tuple;
}

AtomId Universe::id(const Atom& a) const {
    if (auto id = find(a)) return *id;
    throw DomainError("atom " + to_string(a) + " is not in the universe");
}

const PredicateSymbol& Universe::predicate_of(AtomId id) const {
    if (id >= atom_count_) throw DomainError("atom id out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
    // Predicates of positive arity own no atoms when there are no constants.
    while (it != offsets_.begin()) {
        --it;
        const std::size_t p = static_cast<std::size_t>(it - offsets_.begin());
        const std::size_t next = p + 1 < offsets_.size() ? offsets_[p + 1] : atom_count_;
        if (id >= offsets_[p] && id < next) return predicates_[p];
    }
    throw DomainError("atom id out of range");
}

Atom Universe::atom(AtomId id) const {
    const auto& sym = predicate_of(id);
    std::size_t tuple = id - offsets_[pred_index_.at(sym)];
    Atom a{sym.name, std::vector<Term>(sym.arity)};
    for (std::size_t k = sym.arity; k-- > 0;) {
        a.args[k] = Term::constant(constants_[tuple % constants_.size()]);
        tuple /= constants_.size();
    }
    return a;
}

std::string Universe::render(AtomId id) const { return to_string(atom(id)); }

AtomSet Universe::atoms_of(const PredicateSet& preds) const {
    AtomSet out(atom_count_);
    for (const auto& sym : preds) {
        auto p = pred_index_.find(sym);
        if (p == pred_index_.end()) continue;
        const std::size_t begin = offsets_[p->second];
        const std::size_t end = p->second + 1 < offsets_.size() ? offsets_[p->second + 1] : atom_count_;
        for (std::size_t a = begin; a < end; ++a) out.set(a);
    }
    return out;
}

GroundModule::GroundModule(std::shared_ptr<const Universe> universe, std::string name, std::vector<GroundRule> rules,
                           PredicateSet defines, PredicateSet body_predicates)
    : universe_(std::move(universe)), name_(std::move(name)), rules_(std::move(rules)),
      defines_(std::move(defines)), body_predicates_(std::move(body_predicates)) {
    defined_ = universe_->atoms_of(defines_);
    by_head_.resize(universe_->atom_count());
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const auto& r = rules_[i];
        if (r.head >= universe_->atom_count() || !defined_.test(r.head))
            throw SemanticError("module " + name_ + ": ground rule head is outside its defines");
        by_head_[r.head].push_back(i);
        for (const auto& l : r.body) {
            if (l.atom >= universe_->atom_count()) throw DomainError("ground literal outside the universe");
            definite_ = definite_ && l.positive;
        }
    }
}

std::shared_ptr<const Universe> build_universe(const std::vector<Module>& modules,
                                               const std::set<std::string>& extra_constants,
                                               const PredicateSet& extra_predicates, std::size_t max_atoms) {
    std::set<std::string> constants = extra_constants;
    PredicateSet preds = extra_predicates;
    bool has_variables = false;
    for (const auto& m : modules) {
        auto c = m.constants();
        constants.insert(c.begin(), c.end());
        auto p = m.predicates();
        preds.insert(p.begin(), p.end());
        for (const auto& r : m.rules()) has_variables = has_variables || !variables_of(r).empty();
    }
    if (has_variables && constants.empty())
        throw SemanticError("rules have variables but the program mentions no constants");
    return std::make_shared<const Universe>(std::move(constants), std::move(preds), max_atoms);
}

GroundModule ground_module(const Module& module, std::shared_ptr<const Universe> universe) {
    const auto& u = *universe;
    std::vector<GroundRule> out;
    for (const auto& rule : module.rules()) {
        check_safety(rule);
        const auto vars = variables_of(rule);
        const std::size_t nc = u.constants().size();
        if (!vars.empty() && nc == 0) throw SemanticError("cannot ground '" + to_string(rule) + "' without constants");

        std::vector<std::size_t> choice(vars.size(), 0);
        auto instantiate = [&](const Atom& a) {
            Atom g{a.predicate, {}};
            for (const auto& t : a.args) {
                if (!t.is_variable()) {
                    g.args.push_back(t);
                    continue;
                }
                const auto pos = std::find(vars.begin(), vars.end(), t.name) - vars.begin();
                g.args.push_back(Term::constant(u.constants()[choice[pos]]));
            }
            return u.id(g);
        };
        while (true) {
            GroundRule g{instantiate(rule.head), {}};
            for (const auto& l : rule.body) g.body.push_back({l.positive, instantiate(l.atom)});
            out.push_back(std::move(g));

            std::size_t k = 0;
            while (k < choice.size() && ++choice[k] == nc) choice[k++] = 0;
            if (k == choice.size()) break;
        }
    }
    return GroundModule(std::move(universe), module.name(), std::move(out), module.defines(),
                        module.body_predicates());
}

std::vector<GroundModule> ground(const std::vector<Module>& modules, const std::set<std::string>& extra_constants,
                                 std::size_t max_atoms) {
    auto universe = build_universe(modules, extra_constants, {}, max_atoms);
    std::vector<GroundModule> out;
    for (const auto& m : modules) out.push_back(ground_module(m, universe));
    return out;
}

bool precedes(const GroundModule& p, const GroundModule& q) {
    for (const auto& sym : q.body_predicates())
        if (p.defines().count(sym)) return false;
    return true;
}

GroundModule unite(const GroundModule& p, const GroundModule& q) {
    if (p.universe_ptr() != q.universe_ptr()) throw DomainError("cannot unite modules grounded over different universes");
    std::vector<GroundRule> rules = p.rules();
    const bool overlap = p.defined_atoms().intersects(q.defined_atoms());
    for (const auto& r : q.rules())
        if (!overlap || std::find(rules.begin(), rules.end(), r) == rules.end()) rules.push_back(r);
    PredicateSet defines = p.defines();
    defines.insert(q.defines().begin(), q.defines().end());
    PredicateSet body = p.body_predicates();
    body.insert(q.body_predicates().begin(), q.body_predicates().end());
    const std::string name = p.name() == q.name() ? p.name() : p.name() + "+" + q.name();
    return GroundModule(p.universe_ptr(), name, std::move(rules), std::move(defines), std::move(body));
}

GroundModule unite(const std::vector<GroundModule>& modules) {
    if (modules.empty()) throw DomainError("cannot unite an empty module list");
    GroundModule out = modules.front();
    for (std::size_t i = 1; i < modules.size(); ++i) out = unite(out, modules[i]);
    return out;
}

} // namespace modsem
