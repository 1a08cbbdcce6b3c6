#include "modsem/syntax.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "modsem/errors.hpp"

namespace modsem {

bool Atom::is_ground() const {
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
}

namespace {

void collect_vars(const Atom& a, std::vector<std::string>& out) {
    for (const auto& t : a.args)
        if (t.is_variable() && std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
}

} // namespace

std::vector<std::string> variables_of(const Rule& rule) {
    std::vector<std::string> out;
    collect_vars(rule.head, out);
    for (const auto& l : rule.body) collect_vars(l.atom, out);
    return out;
}

std::vector<std::string> variables_of(const std::vector<Literal>& literals) {
    std::vector<std::string> out;
    for (const auto& l : literals) collect_vars(l.atom, out);
    return out;
}

void check_safety(const Rule& rule) {
    std::vector<std::string> bound;
    for (const auto& l : rule.body)
        if (l.positive) collect_vars(l.atom, bound);
    for (const auto& v : variables_of(rule))
        if (std::find(bound.begin(), bound.end(), v) == bound.end())
            throw SemanticError("unsafe rule '" + to_string(rule) + "': variable " + v +
                                " does not occur in a positive body literal");
}

Module::Module(std::string name, std::vector<Rule> rules, PredicateSet defines)
    : name_(std::move(name)), rules_(std::move(rules)), defines_(std::move(defines)) {
    for (const auto& r : rules_)
        if (!defines_.count(r.head.symbol()))
            throw SemanticError("module " + name_ + ": head predicate " + to_string(r.head.symbol()) +
                                " of rule '" + to_string(r) + "' is not in its defines");
}

PredicateSet Module::body_predicates() const {
    PredicateSet out;
    for (const auto& r : rules_)
        for (const auto& l : r.body) out.insert(l.atom.symbol());
    return out;
}

PredicateSet Module::predicates() const {
    PredicateSet out = defines_;
    for (const auto& r : rules_) {
        out.insert(r.head.symbol());
        for (const auto& l : r.body) out.insert(l.atom.symbol());
    }
    return out;
}

std::set<std::string> Module::constants() const {
    std::set<std::string> out;
    auto add = [&](const Atom& a) {
        for (const auto& t : a.args)
            if (!t.is_variable()) out.insert(t.name);
    };
    for (const auto& r : rules_) {
        add(r.head);
        for (const auto& l : r.body) add(l.atom);
    }
    return out;
}

bool precedes(const Module& p, const Module& q) {
    for (const auto& sym : q.body_predicates())
        if (p.defines().count(sym)) return false;
    return true;
}

Module union_modules(const Module& p, const Module& q) {
    Module out;
    out.name_ = p.name() == q.name() ? p.name() : p.name() + "+" + q.name();
    out.rules_ = p.rules();
    for (const auto& r : q.rules())
        if (std::find(out.rules_.begin(), out.rules_.end(), r) == out.rules_.end()) out.rules_.push_back(r);
    out.defines_ = p.defines();
    for (const auto& sym : q.defines()) {
        if (out.defines_.count(sym) && p.name() != q.name()) out.overlap_warning_ = true;
        out.defines_.insert(sym);
    }
    out.overlap_warning_ = out.overlap_warning_ || p.overlap_warning() || q.overlap_warning();
    return out;
}

Module union_modules(const std::vector<Module>& modules, const std::string& name) {
    if (modules.empty()) return Module(name, {}, {});
    Module out = modules.front();
    for (std::size_t i = 1; i < modules.size(); ++i) out = union_modules(out, modules[i]);
    if (!name.empty()) out.name_ = name;
    return out;
}

std::vector<std::string> Plan::names() const {
    std::vector<std::string> out;
    for (const auto& m : order) out.push_back(m.name());
    return out;
}

Plan stratify(const std::vector<Module>& modules) {
    const std::size_t n = modules.size();
    std::map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < n; ++i) {
        if (!by_name.emplace(modules[i].name(), i).second)
            throw SemanticError("duplicate module name " + modules[i].name());
        for (std::size_t j = 0; j < i; ++j)
            for (const auto& sym : modules[i].defines())
                if (modules[j].defines().count(sym))
                    throw SemanticError("modules " + modules[j].name() + " and " + modules[i].name() +
                                        " both define " + to_string(sym) + "; evaluate their union monolithically");
    }

    // calls[i] holds the modules whose predicates module i uses.
    std::vector<std::set<std::size_t>> calls(n);
    std::vector<std::size_t> pending(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !precedes(modules[j], modules[i])) calls[i].insert(j);
    std::vector<std::vector<std::size_t>> callers(n);
    for (std::size_t i = 0; i < n; ++i) {
        pending[i] = calls[i].size();
        for (std::size_t j : calls[i]) callers[j].push_back(i);
    }

    auto by_module_name = [&](std::size_t a, std::size_t b) { return modules[a].name() > modules[b].name(); };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_module_name)> ready(by_module_name);
    for (std::size_t i = 0; i < n; ++i)
        if (pending[i] == 0) ready.push(i);

    Plan plan;
    while (!ready.empty()) {
        const std::size_t i = ready.top();
        ready.pop();
        plan.order.push_back(modules[i]);
        for (std::size_t c : callers[i])
            if (--pending[c] == 0) ready.push(c);
    }
    if (plan.order.size() != n) {
        std::string stuck;
        for (std::size_t i = 0; i < n; ++i)
            if (pending[i] != 0) stuck += (stuck.empty() ? "" : ", ") + modules[i].name();
        throw SemanticError("cyclic dependency between modules " + stuck +
                            "; modular evaluation is not possible");
    }
    return plan;
}

Module wrap_goal(const std::vector<Literal>& goal, const PredicateSet& existing, const std::string& answer_name) {
    const auto vars = variables_of(goal);
    const PredicateSymbol answer{answer_name, vars.size()};
    for (const auto& sym : existing)
        if (sym.name == answer_name)
            throw SemanticError("goal wrapper predicate " + to_string(answer) + " clashes with an existing predicate");
    Atom head{answer_name, {}};
    for (const auto& v : vars) head.args.push_back(Term::variable(v));
    Rule rule{std::move(head), goal};
    check_safety(rule);
    return Module(answer_name, {std::move(rule)}, {answer});
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Atom& a) {
    if (a.args.empty()) return a.predicate;
    std::string out = a.predicate + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) out += (i ? "," : "") + a.args[i].name;
    return out + ")";
}

std::string to_string(const Literal& l) { return (l.positive ? "" : "not ") + to_string(l.atom); }

std::string to_string(const Rule& r) {
    std::string out = to_string(r.head);
    if (!r.body.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < r.body.size(); ++i) out += (i ? ", " : "") + to_string(r.body[i]);
    }
    return out + ".";
}

std::string to_string(const PredicateSymbol& p) { return p.name + "/" + std::to_string(p.arity); }

std::string to_string(const Module& m) {
    std::string out = "module " + m.name() + " defines ";
    bool first = true;
    for (const auto& sym : m.defines()) {
        out += (first ? "" : ", ") + to_string(sym);
        first = false;
    }
    out += " {\n";
    for (const auto& r : m.rules()) out += "  " + to_string(r) + "\n";
    return out + "}\n";
}

} // namespace modsem
