#include "modsem/lattice.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "modsem/errors.hpp"

namespace modsem {

FinitePoset::FinitePoset(std::string name, std::vector<std::string> labels,
                         std::vector<std::vector<bool>> leq)
    : name_(std::move(name)), labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if (leq.size() != n) throw DomainError("leq table has wrong number of rows");
    leq_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        if (leq[x].size() != n) throw DomainError("leq table row has wrong length");
        for (std::size_t y = 0; y < n; ++y) leq_[index(x, y)] = leq[x][y] ? 1 : 0;
    }

    for (std::size_t x = 0; x < n; ++x) {
        if (!leq_[index(x, x)]) throw DomainError("order is not reflexive at " + labels_[x]);
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && leq_[index(x, y)] && leq_[index(y, x)])
                throw DomainError("order is not antisymmetric: " + labels_[x] + ", " + labels_[y]);
            for (std::size_t z = 0; z < n; ++z)
                if (leq_[index(x, y)] && leq_[index(y, z)] && !leq_[index(x, z)])
                    throw DomainError("order is not transitive: " + labels_[x] + " <= " +
                                      labels_[y] + " <= " + labels_[z]);
        }
    }

    join_.assign(n * n, npos);
    meet_.assign(n * n, npos);
    std::vector<Element> upper, lower;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            upper.clear();
            lower.clear();
            for (std::size_t z = 0; z < n; ++z) {
                if (leq_[index(x, z)] && leq_[index(y, z)]) upper.push_back(z);
                if (leq_[index(z, x)] && leq_[index(z, y)]) lower.push_back(z);
            }
            for (Element u : upper)
                if (std::all_of(upper.begin(), upper.end(), [&](Element v) { return leq_[index(u, v)] != 0; }))
                    join_[index(x, y)] = u;
            for (Element l : lower)
                if (std::all_of(lower.begin(), lower.end(), [&](Element v) { return leq_[index(v, l)] != 0; }))
                    meet_[index(x, y)] = l;
        }
    }

    for (std::size_t x = 0; x < n; ++x) {
        bool below_all = true, above_all = true;
        for (std::size_t y = 0; y < n; ++y) {
            below_all = below_all && leq_[index(x, y)];
            above_all = above_all && leq_[index(y, x)];
        }
        if (below_all) least_ = x;
        if (above_all) greatest_ = x;
    }
}

const std::string& FinitePoset::label(Element x) const {
    check(x);
    return labels_[x];
}

std::optional<Element> FinitePoset::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Element>(it - labels_.begin());
}

void FinitePoset::check(Element x) const {
    if (x >= labels_.size())
        throw DomainError("element " + std::to_string(x) + " is not in " + name_);
}

bool FinitePoset::leq(Element x, Element y) const {
    check(x);
    check(y);
    return leq_[index(x, y)] != 0;
}

std::optional<Element> FinitePoset::try_join(Element x, Element y) const {
    check(x);
    check(y);
    Element j = join_[index(x, y)];
    if (j == npos) return std::nullopt;
    return j;
}

std::optional<Element> FinitePoset::try_meet(Element x, Element y) const {
    check(x);
    check(y);
    Element m = meet_[index(x, y)];
    if (m == npos) return std::nullopt;
    return m;
}

Element FinitePoset::join(Element x, Element y) const {
    if (auto j = try_join(x, y)) return *j;
    throw UndefinedBound("no join of " + labels_[x] + " and " + labels_[y] + " in " + name_);
}

Element FinitePoset::meet(Element x, Element y) const {
    if (auto m = try_meet(x, y)) return *m;
    throw UndefinedBound("no meet of " + labels_[x] + " and " + labels_[y] + " in " + name_);
}

bool FinitePoset::is_lattice() const {
    if (labels_.empty()) return false;
    return std::find(join_.begin(), join_.end(), npos) == join_.end() &&
           std::find(meet_.begin(), meet_.end(), npos) == meet_.end();
}

FiniteLattice::FiniteLattice(FinitePoset poset) : FinitePoset(std::move(poset)) {
    if (!is_lattice()) throw DomainError(name() + " is not a lattice");
}

PowersetLattice::PowersetLattice(std::vector<std::string> universe) : universe_(std::move(universe)) {
    if (universe_.size() > max_labels)
        throw BudgetExceeded("powerset universe has " + std::to_string(universe_.size()) +
                             " labels, limit is " + std::to_string(max_labels));
    std::set<std::string> seen(universe_.begin(), universe_.end());
    if (seen.size() != universe_.size()) throw DomainError("duplicate label in powerset universe");
}

void PowersetLattice::check(Mask x) const {
    if (x > top()) throw DomainError("mask outside powerset carrier");
}

bool PowersetLattice::leq(Mask x, Mask y) const {
    check(x);
    check(y);
    return (x & ~y) == 0;
}

PowersetLattice::Mask PowersetLattice::join(Mask x, Mask y) const {
    check(x);
    check(y);
    return x | y;
}

PowersetLattice::Mask PowersetLattice::meet(Mask x, Mask y) const {
    check(x);
    check(y);
    return x & y;
}

PowersetLattice::Mask PowersetLattice::element(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) {
        auto it = std::find(universe_.begin(), universe_.end(), l);
        if (it == universe_.end()) throw DomainError("label '" + l + "' is not in the universe");
        m |= Mask{1} << (it - universe_.begin());
    }
    return m;
}

std::string PowersetLattice::render(Mask x) const {
    check(x);
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        if (!(x & (Mask{1} << i))) continue;
        if (!first) out += ",";
        out += universe_[i];
        first = false;
    }
    return out + "}";
}

FiniteLattice PowersetLattice::to_lattice(std::string name) const {
    if (universe_.size() > max_boolean_rank)
        throw BudgetExceeded("explicit powerset tables are limited to " +
                             std::to_string(max_boolean_rank) + " labels");
    const std::size_t n = size();
    std::vector<std::string> labels;
    labels.reserve(n);
    std::vector<std::vector<bool>> leq_table(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x) {
        labels.push_back(render(static_cast<Mask>(x)));
        for (std::size_t y = 0; y < n; ++y) leq_table[x][y] = (x & ~y) == 0;
    }
    return FiniteLattice(FinitePoset(std::move(name), std::move(labels), std::move(leq_table)));
}

PowersetLattice make_powerset_lattice(std::vector<std::string> universe) {
    return PowersetLattice(std::move(universe));
}

namespace {

FiniteLattice chain(std::string name, std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> leq_table(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) leq_table[x][y] = x <= y;
    return FiniteLattice(FinitePoset(std::move(name), std::move(labels), std::move(leq_table)));
}

} // namespace

FiniteLattice make_builtin(BuiltinKind kind, std::size_t n) {
    switch (kind) {
    case BuiltinKind::chain: {
        if (n == 0) throw DomainError("chain(0) is empty, hence not a lattice");
        if (n > max_chain_length)
            throw BudgetExceeded("chain length must be at most " + std::to_string(max_chain_length));
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        return chain("chain(" + std::to_string(n) + ")", std::move(labels));
    }
    case BuiltinKind::boolean: {
        if (n > max_boolean_rank)
            throw BudgetExceeded("boolean rank must be at most " + std::to_string(max_boolean_rank));
        std::vector<std::string> letters;
        for (std::size_t i = 0; i < n; ++i) letters.emplace_back(1, static_cast<char>('a' + i));
        return PowersetLattice(std::move(letters)).to_lattice("boolean(" + std::to_string(n) + ")");
    }
    case BuiltinKind::appendix_chain:
        return chain("appendix_chain", {"1", "2", "3"});
    }
    throw DomainError("unknown builtin lattice kind");
}

FiniteLattice builtin_from_name(const std::string& name) {
    static const std::regex sized(R"((chain|boolean)\((\d+)\))");
    std::smatch m;
    if (name == "appendix_chain") return make_builtin(BuiltinKind::appendix_chain);
    if (std::regex_match(name, m, sized)) {
        const auto n = static_cast<std::size_t>(std::stoul(m[2].str()));
        return make_builtin(m[1] == "chain" ? BuiltinKind::chain : BuiltinKind::boolean, n);
    }
    throw DomainError("unknown lattice '" + name + "'");
}

} // namespace modsem
