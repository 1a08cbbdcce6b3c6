#include "modsem/operator_algebra.hpp"

#include <algorithm>

#include "modsem/closure.hpp"
#include "modsem/errors.hpp"

namespace modsem {

EndoFunction::EndoFunction(std::shared_ptr<const FinitePoset> domain, std::vector<Element> table)
    : domain_(std::move(domain)), table_(std::move(table)) {
    if (!domain_) throw DomainError("function without a domain");
    if (table_.size() != domain_->size())
        throw DomainError("function table is not total on " + domain_->name());
    for (Element y : table_) domain_->check(y);
}

EndoFunction EndoFunction::identity(std::shared_ptr<const FinitePoset> domain) {
    std::vector<Element> table(domain->size());
    for (Element x = 0; x < table.size(); ++x) table[x] = x;
    return EndoFunction(std::move(domain), std::move(table));
}

EndoFunction EndoFunction::constant(std::shared_ptr<const FinitePoset> domain, Element value) {
    std::vector<Element> table(domain->size(), value);
    return EndoFunction(std::move(domain), std::move(table));
}

EndoFunction EndoFunction::tabulate(std::shared_ptr<const FinitePoset> domain,
                                    const std::function<Element(Element)>& fn) {
    std::vector<Element> table(domain->size());
    for (Element x = 0; x < table.size(); ++x) table[x] = fn(x);
    return EndoFunction(std::move(domain), std::move(table));
}

Element EndoFunction::operator()(Element x) const {
    domain_->check(x);
    return table_[x];
}

std::string EndoFunction::render() const {
    std::string out;
    for (Element x = 0; x < table_.size(); ++x) {
        if (x) out += ' ';
        out += domain_->label(x) + "->" + domain_->label(table_[x]);
    }
    return out;
}

void require_same_domain(const EndoFunction& f, const EndoFunction& g) {
    if (f.domain_ptr() != g.domain_ptr() && !(f.domain() == g.domain()))
        throw DomainError("functions act on different carriers: " + f.domain().name() + ", " +
                          g.domain().name());
}

bool pointwise_leq(const EndoFunction& f, const EndoFunction& g) {
    require_same_domain(f, g);
    for (Element x = 0; x < f.domain().size(); ++x)
        if (!f.domain().leq(f(x), g(x))) return false;
    return true;
}

EndoFunction plus(const EndoFunction& f, const EndoFunction& g) {
    require_same_domain(f, g);
    const auto& d = f.domain();
    return EndoFunction::tabulate(f.domain_ptr(), [&](Element x) { return d.join(f(x), g(x)); });
}

EndoFunction dual_plus(const EndoFunction& f, const EndoFunction& g) {
    require_same_domain(f, g);
    const auto& d = f.domain();
    return EndoFunction::tabulate(f.domain_ptr(), [&](Element x) { return d.meet(f(x), g(x)); });
}

EndoFunction compose(const EndoFunction& f, const EndoFunction& g) {
    require_same_domain(f, g);
    return EndoFunction::tabulate(f.domain_ptr(), [&](Element x) { return f(g(x)); });
}

EndoFunction inflate(const EndoFunction& f) {
    const auto& d = f.domain();
    return EndoFunction::tabulate(f.domain_ptr(), [&](Element x) { return d.join(f(x), x); });
}

Element star(const EndoFunction& f, Element x) {
    const auto& d = f.domain();
    d.check(x);
    return iterate_to_stability(x, [&](Element y) { return d.join(y, f(y)); }, d.size(), "star");
}

EndoFunction star(const EndoFunction& f) {
    return EndoFunction::tabulate(f.domain_ptr(), [&](Element x) { return star(f, x); });
}

Element lfp_from(const EndoFunction& f, Element x) {
    const auto& d = f.domain();
    if (!d.leq(x, f(x)))
        throw PreconditionError("lfp_from: " + d.label(x) + " is not below f(" + d.label(x) +
                                ") = " + d.label(f(x)));
    return star(f, x);
}

Element down_closure(const EndoFunction& f, Element x) {
    const auto& d = f.domain();
    d.check(x);
    return iterate_to_stability(x, [&](Element y) { return d.meet(y, f(y)); }, d.size(), "down_closure");
}

EndoFunction down_closure(const EndoFunction& f) {
    return EndoFunction::tabulate(f.domain_ptr(), [&](Element x) { return down_closure(f, x); });
}

FunctionProperties classify(const EndoFunction& f) {
    const auto& d = f.domain();
    FunctionProperties p{true, true, true, true};
    for (Element x = 0; x < d.size(); ++x) {
        p.increasing = p.increasing && d.leq(x, f(x));
        p.decreasing = p.decreasing && d.leq(f(x), x);
        for (Element y = 0; y < d.size() && p.monotone; ++y)
            if (d.leq(x, y) && !d.leq(f(x), f(y))) p.monotone = false;
    }
    p.continuous = p.monotone;
    return p;
}

FixedpointSets fixedpoint_sets(const EndoFunction& f) {
    const auto& d = f.domain();
    FixedpointSets s;
    for (Element x = 0; x < d.size(); ++x) {
        const bool pre = d.leq(f(x), x);
        const bool post = d.leq(x, f(x));
        if (pre) s.pre.push_back(x);
        if (post) s.post.push_back(x);
        if (pre && post) s.fixed.push_back(x);
    }
    return s;
}

namespace {

// First x with a(x) != b(x).
std::optional<Element> first_difference(const EndoFunction& a, const EndoFunction& b) {
    for (Element x = 0; x < a.domain().size(); ++x)
        if (a(x) != b(x)) return x;
    return std::nullopt;
}

bool pointwise_geq(const EndoFunction& lhs, const EndoFunction& rhs) {
    return pointwise_leq(rhs, lhs);
}

std::optional<Element> first_difference(const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
}

bool includes(const std::vector<Element>& big, const std::vector<Element>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void require_monotone_increasing(const EndoFunction& f, const char* which) {
    auto p = classify(f);
    if (!p.monotone || !p.increasing)
        throw PreconditionError(std::string("check_lemma: ") + which + " is not monotone and increasing");
}

} // namespace

bool LemmaVerdict::theorem_holds() const {
    return std::none_of(parts.begin(), parts.end(), [](const PartVerdict& p) { return p.violated(); });
}

LemmaVerdict check_lemma(const EndoFunction& f, const EndoFunction& g) {
    require_same_domain(f, g);
    require_monotone_increasing(f, "f");
    require_monotone_increasing(g, "g");

    const EndoFunction f_star = star(f);
    const EndoFunction g_star = star(g);
    const EndoFunction sum_star = star(plus(f, g));
    const EndoFunction fg_star = star(compose(f, g));
    const EndoFunction gf_star = star(compose(g, f));
    const EndoFunction staged = compose(f_star, g_star);
    const bool g_continuous = classify(g).continuous;

    LemmaVerdict v;
    {
        auto w = first_difference(sum_star, fg_star);
        if (!w) w = first_difference(sum_star, gf_star);
        v.parts[0] = {true, !w.has_value(), w};
    }

    auto staged_witness = first_difference(sum_star, fg_star);
    if (!staged_witness) staged_witness = first_difference(sum_star, staged);
    const bool staged_holds = !staged_witness.has_value();

    const bool hyp2 = pointwise_geq(compose(f_star, g), compose(g, f_star));
    const bool hyp3 = g_continuous && pointwise_geq(compose(f, g), compose(g, f));
    const bool hyp4 = g_continuous && pointwise_geq(compose(f, g_star), compose(g_star, f));
    v.parts[1] = {hyp2, staged_holds, staged_witness};
    v.parts[2] = {hyp3, staged_holds, staged_witness};
    v.parts[3] = {hyp4, staged_holds, staged_witness};
    return v;
}

bool SandwichVerdict::theorem_holds() const {
    return std::none_of(parts.begin(), parts.end(), [](const PartVerdict& p) { return p.violated(); });
}

SandwichVerdict check_sandwich(const EndoFunction& f1, const EndoFunction& g, const EndoFunction& f2) {
    require_same_domain(f1, g);
    require_same_domain(g, f2);
    const auto& d = g.domain();
    for (Element x = 0; x < d.size(); ++x)
        if (!d.leq(f1(x), g(x)) || !d.leq(g(x), f2(x)))
            throw PreconditionError("check_sandwich: f1 <= g <= f2 fails at " + d.label(x));

    SandwichVerdict v;
    v.lower = fixedpoint_sets(f1);
    v.middle = fixedpoint_sets(g);
    v.upper = fixedpoint_sets(f2);
    const auto& lo = v.lower;
    const auto& mid = v.middle;
    const auto& up = v.upper;

    const bool pre_eq = lo.pre == up.pre;
    const bool post_eq = lo.post == up.post;
    const bool fpt_eq = lo.fixed == up.fixed;

    auto all_equal = [](const std::vector<Element>& a, const std::vector<Element>& b,
                        const std::vector<Element>& c) -> PartVerdict {
        auto w = first_difference(a, b);
        if (!w) w = first_difference(a, c);
        return {false, !w.has_value(), w};
    };

    v.parts[0] = all_equal(mid.pre, lo.pre, up.pre);
    v.parts[0].hypothesis = pre_eq;
    v.parts[1] = all_equal(mid.post, lo.post, up.post);
    v.parts[1].hypothesis = post_eq;
    const PartVerdict fpt_all = all_equal(mid.fixed, lo.fixed, up.fixed);
    v.parts[2] = fpt_all;
    v.parts[2].hypothesis = pre_eq && fpt_eq;
    v.parts[3] = fpt_all;
    v.parts[3].hypothesis = post_eq && fpt_eq;
    v.parts[4] = fpt_all;
    v.parts[4].hypothesis = pre_eq && post_eq;

    PartVerdict p6;
    p6.hypothesis = fpt_eq;
    p6.conclusion = includes(mid.fixed, lo.fixed) && includes(mid.fixed, up.fixed);
    if (!p6.conclusion) {
        for (Element x : lo.fixed)
            if (!std::binary_search(mid.fixed.begin(), mid.fixed.end(), x)) {
                p6.witness = x;
                break;
            }
        if (!p6.witness) p6.witness = first_difference(mid.fixed, up.fixed);
    }
    v.parts[5] = p6;
    v.strict_part6 = fpt_eq && p6.conclusion && mid.fixed.size() > lo.fixed.size();
    return v;
}

CommonFixedpointReport common_fixedpoints_check(const EndoFunction& f, const EndoFunction& g) {
    require_same_domain(f, g);
    if (!classify(f).increasing || !classify(g).increasing)
        throw PreconditionError("common_fixedpoints_check: f and g must be increasing");

    const auto fpt_f = fixedpoint_sets(f).fixed;
    const auto fpt_g = fixedpoint_sets(g).fixed;
    CommonFixedpointReport r;
    std::set_intersection(fpt_f.begin(), fpt_f.end(), fpt_g.begin(), fpt_g.end(),
                          std::back_inserter(r.common));

    const auto fg = fixedpoint_sets(compose(f, g)).fixed;
    const auto gf = fixedpoint_sets(compose(g, f)).fixed;
    const auto sum = fixedpoint_sets(plus(f, g)).fixed;
    r.witness = first_difference(r.common, fg);
    if (!r.witness) r.witness = first_difference(r.common, gf);
    if (!r.witness) r.witness = first_difference(r.common, sum);
    r.holds = !r.witness.has_value();
    return r;
}

} // namespace modsem
