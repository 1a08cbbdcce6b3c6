#include "modsem/function_lab.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "modsem/errors.hpp"

namespace modsem {

namespace {

enum class Constraint { none, monotone, monotone_increasing };

std::vector<EndoFunction> enumerate(std::shared_ptr<const FinitePoset> domain, Constraint c,
                                    std::size_t budget) {
    const auto& d = *domain;
    const std::size_t n = d.size();
    if (n > budget)
        throw BudgetExceeded("enumeration on " + d.name() + " (" + std::to_string(n) +
                             " elements) exceeds the budget of " + std::to_string(budget));

    std::vector<EndoFunction> out;
    std::vector<Element> table(n);
    std::function<void(Element)> assign = [&](Element x) {
        if (x == n) {
            out.emplace_back(domain, table);
            return;
        }
        for (Element y = 0; y < n; ++y) {
            if (c == Constraint::monotone_increasing && !d.leq(x, y)) continue;
            bool ok = true;
            if (c != Constraint::none) {
                for (Element z = 0; z < x && ok; ++z) {
                    if (d.leq(z, x) && !d.leq(table[z], y)) ok = false;
                    if (d.leq(x, z) && !d.leq(y, table[z])) ok = false;
                }
            }
            if (!ok) continue;
            table[x] = y;
            assign(x + 1);
        }
    };
    assign(0);
    return out;
}

void tally(PartTally& t, const PartVerdict& v, const std::vector<const EndoFunction*>& fns,
           const FinitePoset& d) {
    if (v.hypothesis) ++t.hypothesis_held;
    if (v.conclusion) ++t.conclusion_held;
    if (v.hypothesis && v.conclusion) ++t.both;
    if (v.violated()) ++t.violations;
    if (!v.hypothesis && !v.conclusion) {
        ++t.refuted;
        if (t.gallery.size() < gallery_cap) {
            GalleryEntry e;
            for (const auto* f : fns) e.functions.push_back(f->render());
            e.witness = v.witness ? d.label(*v.witness) : "";
            t.gallery.push_back(std::move(e));
        }
    }
}

} // namespace

std::vector<EndoFunction> enumerate_monotone_increasing(std::shared_ptr<const FinitePoset> domain) {
    return enumerate(std::move(domain), Constraint::monotone_increasing, monotone_increasing_budget);
}

std::vector<EndoFunction> enumerate_monotone(std::shared_ptr<const FinitePoset> domain) {
    return enumerate(std::move(domain), Constraint::monotone, monotone_budget);
}

std::vector<EndoFunction> enumerate_all_functions(std::shared_ptr<const FinitePoset> domain) {
    return enumerate(std::move(domain), Constraint::none, all_functions_budget);
}

bool CensusReport::passed() const {
    return std::all_of(parts.begin(), parts.end(), [](const PartTally& t) { return t.violations == 0; });
}

CensusReport run_lemma_census(std::shared_ptr<const FinitePoset> lattice) {
    const auto fns = enumerate_monotone_increasing(lattice);
    CensusReport r;
    r.kind = "lemma";
    r.lattice = lattice->name();
    r.mode = "monotone_increasing";
    r.functions = fns.size();
    r.parts.resize(4);
    for (const auto& f : fns) {
        for (const auto& g : fns) {
            const auto v = check_lemma(f, g);
            ++r.instances;
            for (std::size_t i = 0; i < 4; ++i) tally(r.parts[i], v.parts[i], {&f, &g}, *lattice);
        }
    }
    return r;
}

CensusReport run_sandwich_census(std::shared_ptr<const FinitePoset> poset, SandwichMode mode) {
    const auto fns = mode == SandwichMode::all_functions ? enumerate_all_functions(poset)
                                                         : enumerate_monotone(poset);
    CensusReport r;
    r.kind = "sandwich";
    r.lattice = poset->name();
    r.mode = mode == SandwichMode::all_functions ? "all_functions" : "monotone";
    r.functions = fns.size();
    r.parts.resize(6);
    for (const auto& f1 : fns) {
        for (const auto& f2 : fns) {
            if (!pointwise_leq(f1, f2)) continue;
            for (const auto& g : fns) {
                if (!pointwise_leq(f1, g) || !pointwise_leq(g, f2)) continue;
                const auto v = check_sandwich(f1, g, f2);
                ++r.instances;
                for (std::size_t i = 0; i < 6; ++i) tally(r.parts[i], v.parts[i], {&f1, &g, &f2}, *poset);
                if (v.strict_part6) {
                    ++r.strict_part6;
                    if (r.strict_part6_gallery.size() < gallery_cap) {
                        GalleryEntry e{{f1.render(), g.render(), f2.render()}, ""};
                        for (Element x : v.middle.fixed)
                            if (!std::binary_search(v.lower.fixed.begin(), v.lower.fixed.end(), x)) {
                                e.witness = poset->label(x);
                                break;
                            }
                        r.strict_part6_gallery.push_back(std::move(e));
                    }
                }
            }
        }
    }
    return r;
}

DualityPair duality_pair() {
    const PowersetLattice abc({"a", "b", "c"});
    auto lattice = std::make_shared<const FinitePoset>(abc.to_lattice("powerset{a,b,c}"));
    const Element top = abc.top();
    const Element ab = abc.element({"a", "b"});
    const Element bc = abc.element({"b", "c"});
    auto f = EndoFunction::tabulate(lattice, [&](Element x) { return x == top ? ab : abc.bottom(); });
    auto g = EndoFunction::tabulate(lattice, [&](Element x) { return x == top ? bc : abc.bottom(); });
    return {std::move(f), std::move(g)};
}

DualityReport reproduce_duality_counterexample() {
    const auto [f, g] = duality_pair();
    const auto& d = f.domain();
    const Element top = *d.greatest();
    const Element bottom = *d.least();

    DualityReport r;
    const auto pf = classify(f);
    const auto pg = classify(g);
    r.f_monotone_decreasing = pf.monotone && pf.decreasing;
    r.g_monotone_decreasing = pg.monotone && pg.decreasing;

    const EndoFunction f_down = down_closure(f);
    r.pointwise_condition = pointwise_leq(compose(f_down, g), compose(g, f_down));

    const Element sum_top = down_closure(plus(f, g), top);
    const Element staged_top = down_closure(f, down_closure(g, top));
    r.sum_closure_at_top = d.label(sum_top);
    r.staged_closure_at_top = d.label(staged_top);
    r.reproduced = r.f_monotone_decreasing && r.g_monotone_decreasing && r.pointwise_condition &&
                   sum_top == top && staged_top == bottom;
    return r;
}

AppendixTriple appendix_triple() {
    auto chain = std::make_shared<const FinitePoset>(make_builtin(BuiltinKind::appendix_chain));
    // Elements 0, 1, 2 carry the labels 1, 2, 3.
    EndoFunction f1(chain, {0, 0, 2});
    EndoFunction f2(chain, {0, 2, 2});
    auto g = EndoFunction::identity(chain);
    return {std::move(f1), std::move(g), std::move(f2)};
}

AppendixReport reproduce_appendix_example() {
    const auto [f1, g, f2] = appendix_triple();
    const auto& d = g.domain();
    auto labels = [&](const std::vector<Element>& xs) {
        std::vector<std::string> out;
        for (Element x : xs) out.push_back(d.label(x));
        return out;
    };

    AppendixReport r;
    r.monotone = classify(f1).monotone && classify(f2).monotone && classify(g).monotone;
    r.sandwiched = pointwise_leq(f1, g) && pointwise_leq(g, f2);
    r.fixed_f1 = labels(fixedpoint_sets(f1).fixed);
    r.fixed_f2 = labels(fixedpoint_sets(f2).fixed);
    r.fixed_g = labels(fixedpoint_sets(g).fixed);
    const std::vector<std::string> one_three{"1", "3"};
    const std::vector<std::string> all{"1", "2", "3"};
    r.reproduced = r.monotone && r.sandwiched && r.fixed_f1 == one_three && r.fixed_f2 == one_three &&
                   r.fixed_g == all;
    return r;
}

nlohmann::json to_json(const CensusReport& report) {
    nlohmann::json parts = nlohmann::json::array();
    for (std::size_t i = 0; i < report.parts.size(); ++i) {
        const auto& t = report.parts[i];
        nlohmann::json gallery = nlohmann::json::array();
        for (const auto& e : t.gallery) gallery.push_back({{"functions", e.functions}, {"witness", e.witness}});
        parts.push_back({{"part", i + 1},
                         {"hypothesis_held", t.hypothesis_held},
                         {"conclusion_held", t.conclusion_held},
                         {"both", t.both},
                         {"violations", t.violations},
                         {"hypothesis_and_conclusion_failed", t.refuted},
                         {"gallery", gallery}});
    }
    nlohmann::json j = {{"kind", report.kind},
                        {"lattice", report.lattice},
                        {"mode", report.mode},
                        {"functions", report.functions},
                        {"instances", report.instances},
                        {"parts", parts},
                        {"passed", report.passed()}};
    if (report.kind == "sandwich") {
        nlohmann::json strict = nlohmann::json::array();
        for (const auto& e : report.strict_part6_gallery)
            strict.push_back({{"functions", e.functions}, {"witness", e.witness}});
        j["strict_part6"] = report.strict_part6;
        j["strict_part6_gallery"] = strict;
    }
    return j;
}

nlohmann::json to_json(const DualityReport& r) {
    return {{"f_monotone_decreasing", r.f_monotone_decreasing},
            {"g_monotone_decreasing", r.g_monotone_decreasing},
            {"pointwise_condition", r.pointwise_condition},
            {"sum_closure_at_top", r.sum_closure_at_top},
            {"staged_closure_at_top", r.staged_closure_at_top},
            {"reproduced", r.reproduced}};
}

nlohmann::json to_json(const AppendixReport& r) {
    return {{"monotone", r.monotone},     {"sandwiched", r.sandwiched}, {"fixed_f1", r.fixed_f1},
            {"fixed_f2", r.fixed_f2},     {"fixed_g", r.fixed_g},       {"reproduced", r.reproduced}};
}

std::string to_text(const CensusReport& report) {
    std::ostringstream os;
    os << report.kind << " census on " << report.lattice << " (" << report.mode << "): " << report.functions
       << " functions, " << report.instances << " instances, " << (report.passed() ? "PASS" : "FAIL") << '\n';
    for (std::size_t i = 0; i < report.parts.size(); ++i) {
        const auto& t = report.parts[i];
        os << "  part " << i + 1 << ": hypothesis " << t.hypothesis_held << ", conclusion " << t.conclusion_held
           << ", both " << t.both << ", violations " << t.violations << ", both failed " << t.refuted << '\n';
    }
    if (report.kind == "sandwich") {
        os << "  fixedpoints of g strictly larger: " << report.strict_part6 << '\n';
        for (const auto& e : report.strict_part6_gallery)
            os << "    f1=[" << e.functions[0] << "] g=[" << e.functions[1] << "] f2=[" << e.functions[2]
               << "] extra fixedpoint " << e.witness << '\n';
    }
    return os.str();
}

std::string to_text(const DualityReport& r) {
    std::ostringstream os;
    os << "duality counterexample on powerset{a,b,c}: " << (r.reproduced ? "REPRODUCED" : "NOT REPRODUCED") << '\n'
       << "  f, g monotone decreasing: " << std::boolalpha << (r.f_monotone_decreasing && r.g_monotone_decreasing)
       << '\n'
       << "  f-down . g <= g . f-down: " << r.pointwise_condition << '\n'
       << "  (f+g) down-closure at top: " << r.sum_closure_at_top << '\n'
       << "  f-down . g-down at top: " << r.staged_closure_at_top << '\n';
    return os.str();
}

std::string to_text(const AppendixReport& r) {
    auto set = [](const std::vector<std::string>& xs) {
        std::string s = "{";
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
        return s + "}";
    };
    std::ostringstream os;
    os << "sandwich example on 1<2<3: " << (r.reproduced ? "REPRODUCED" : "NOT REPRODUCED") << '\n'
       << std::boolalpha << "  monotone: " << r.monotone << ", f1 <= g <= f2: " << r.sandwiched << '\n'
       << "  FPT(f1) = " << set(r.fixed_f1) << ", FPT(f2) = " << set(r.fixed_f2) << ", FPT(g) = " << set(r.fixed_g)
       << '\n';
    return os.str();
}

} // namespace modsem
