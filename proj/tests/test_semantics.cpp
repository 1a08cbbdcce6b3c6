#include <gtest/gtest.h>

#include <algorithm>

#include "modsem/errors.hpp"
#include "modsem/parser.hpp"
#include "modsem/semantics.hpp"
#include "modsem/session.hpp"

using namespace modsem;

namespace {

const char* loop_source = R"(
module P defines p/0 {
  p :- p.
  p :- q.
}
module Q defines q/0 {
  q :- q.
}
)";

const char* paths_source = R"(
module edges defines e/2 {
  e(1,2).
  e(2,3).
}
module paths defines path/2 {
  path(X,Y) :- e(X,Y).
  path(X,Y) :- e(X,Z), path(Z,Y).
}
)";

Session load(const std::string& text, const std::string& assume = "") {
    return Session(parse_program(text).modules, parse_literals(assume));
}

// Sorted literal strings, e.g. {"not p", "q"}.
std::vector<std::string> lits(const Universe& u, const SignedSet& s) {
    std::vector<std::string> out;
    for (auto a = s.pos.find_first(); a != AtomSet::npos; a = s.pos.find_next(a)) out.push_back(u.render(a));
    for (auto a = s.neg.find_first(); a != AtomSet::npos; a = s.neg.find_next(a)) out.push_back("not " + u.render(a));
    std::sort(out.begin(), out.end());
    return out;
}
std::vector<std::string> lits(const Universe& u, const PartialInterpretation& i) { return lits(u, i.literals()); }

using Strings = std::vector<std::string>;

PartialInterpretation empty(const Session& s) { return PartialInterpretation(s.universe().atom_count()); }

} // namespace

TEST(Semantics, TpApply) {
    const auto s = load("module P defines p/0 { p :- q. }", "q");
    const auto& p = s.module("P");
    const auto& u = s.universe();
    AtomSet q = u.empty_set();
    q.set(u.id({"q", {}}));
    EXPECT_EQ(render_atoms(u, tp_apply(p, q)), Strings{"p"});
    EXPECT_TRUE(tp_apply(p, u.empty_set()).none());

    const auto f = load("module F defines q/0 { q. }", "");
    AtomSet all = f.universe().empty_set();
    all.set();
    EXPECT_EQ(render_atoms(f.universe(), tp_apply(f.module("F"), all)), Strings{"q"});
    EXPECT_EQ(render_atoms(f.universe(), tp_apply(f.module("F"), f.universe().empty_set())), Strings{"q"});
}

TEST(Semantics, TpRejectsNegation) {
    const auto s = load("module P defines p/0 { p :- not q. }", "q");
    EXPECT_THROW(tp_apply(s.module("P"), s.universe().empty_set()), SemanticError);
}

TEST(Semantics, TpLfpPaths) {
    const auto s = load(paths_source);
    const auto all = s.ground_union();
    const auto model = tp_lfp(all, s.universe().empty_set());
    EXPECT_EQ(render_atoms(s.universe(), model), (Strings{"e(1,2)", "e(2,3)", "path(1,2)", "path(1,3)", "path(2,3)"}));
    EXPECT_EQ(tp_lfp(all, model), model);

    const GroundModule none(s.universe_ptr(), "none", {}, {}, {});
    AtomSet x = s.universe().empty_set();
    x.set(3);
    EXPECT_EQ(tp_lfp(none, x), x);
}

TEST(Semantics, FittingApply) {
    const auto s = load(loop_source);
    EXPECT_EQ(lits(s.universe(), fitting_apply(s.module("Q"), empty(s))), Strings{});

    const auto r = load("module R defines r/0 { }");
    EXPECT_EQ(lits(r.universe(), fitting_apply(r.module("R"), empty(r))), Strings{"not r"});

    const auto n = load("module P defines p/0 { p :- not q. }", "q");
    EXPECT_EQ(lits(n.universe(), fitting_apply(n.module("P"), n.start(parse_literals("q")))), Strings{"not p"});
}

TEST(Semantics, FittingLfp) {
    const auto q = load("module Q defines q/0 { q :- q. }");
    EXPECT_EQ(lits(q.universe(), fitting_lfp(q.module("Q"), empty(q))), Strings{});
    const auto f = load("module Q defines q/0 { q. }");
    EXPECT_EQ(lits(f.universe(), fitting_lfp(f.module("Q"), empty(f))), Strings{"q"});
    const auto two = load("module M defines p/0, q/0 { q. p :- not q. }");
    EXPECT_EQ(lits(two.universe(), fitting_lfp(two.module("M"), empty(two))), (Strings{"not p", "q"}));
}

TEST(Semantics, GreatestUnfounded) {
    const auto s = load(loop_source);
    const auto& u = s.universe();
    const auto pq = s.ground_union();
    EXPECT_EQ(render_atoms(u, greatest_unfounded(pq, SignedSet(u.atom_count()))), (Strings{"p", "q"}));
    EXPECT_EQ(render_atoms(u, greatest_unfounded(s.module("P"), SignedSet(u.atom_count()))), Strings{});
    SignedSet not_q(u.atom_count());
    not_q.neg.set(u.id({"q", {}}));
    EXPECT_EQ(render_atoms(u, greatest_unfounded(s.module("P"), not_q)), Strings{"p"});
}

TEST(Semantics, TwoModuleLoop) {
    const auto s = load(loop_source);
    const auto& u = s.universe();
    const auto& p = s.module("P");
    const auto& q = s.module("Q");
    const auto pq = s.ground_union();
    const auto bottom = empty(s);

    EXPECT_EQ(lits(u, wp_apply(p, bottom)), Strings{});
    EXPECT_EQ(lits(u, wp_apply(q, bottom)), Strings{"not q"});
    EXPECT_EQ(lits(u, wp_apply(pq, bottom)), (Strings{"not p", "not q"}));

    const auto wf_q = wf(q, bottom);
    EXPECT_EQ(lits(u, wf_q), Strings{"not q"});
    EXPECT_EQ(lits(u, evaluate(SemanticsKind::well_founded, p, wf_q)), (Strings{"not p", "not q"}));
    EXPECT_EQ(lits(u, wf(pq, bottom)), (Strings{"not p", "not q"}));

    const auto residual = residualize(wf_q, SemanticsKind::well_founded, u, {{"q", 0}}, "Q1");
    ASSERT_EQ(residual.rules().size(), 1u);
    EXPECT_EQ(to_string(residual.rules()[0]), "q :- q.");
    const auto with_residual = unite(p, ground_module(residual, s.universe_ptr()));
    EXPECT_EQ(lits(u, wf(with_residual, bottom)), (Strings{"not p", "not q"}));
}

TEST(Semantics, WfVersusFitting) {
    const auto loop = load("module M defines p/0 { p :- p. }");
    EXPECT_EQ(lits(loop.universe(), fitting_lfp(loop.module("M"), empty(loop))), Strings{});
    EXPECT_EQ(lits(loop.universe(), wf(loop.module("M"), empty(loop))), Strings{"not p"});
    const auto odd = load("module M defines p/0 { p :- not p. }");
    EXPECT_EQ(lits(odd.universe(), wf(odd.module("M"), empty(odd))), Strings{});
}

TEST(Semantics, StartPreconditions) {
    const auto s = load(loop_source);
    SignedSet bad(s.universe().atom_count());
    bad.pos.set(s.universe().id({"q", {}}));
    EXPECT_THROW(wf(s.module("Q"), PartialInterpretation(bad)), PreconditionError);
    EXPECT_THROW(s.start(parse_literals("q")), PreconditionError);
    const auto free = load("module P defines p/0 { p :- q. }", "q");
    EXPECT_THROW(free.start(parse_literals("q, not q")), UndefinedBound);
    EXPECT_THROW(check_start(free.module("P"), free.start(parse_literals("not q")), SemanticsKind::least_model),
                 PreconditionError);
}

TEST(Semantics, ModularEval) {
    const auto paths = load(paths_source);
    const auto plan = paths.ground_plan(stratify(paths.modules()));
    const auto cmp = compare_evaluations(plan, empty(paths), SemanticsKind::least_model);
    EXPECT_TRUE(cmp.equal);
    EXPECT_EQ(cmp.modular.true_atoms(), tp_lfp(paths.ground_union(), paths.universe().empty_set()));

    const auto loops = load(loop_source);
    const auto wf_cmp = compare_evaluations(loops.ground_plan(stratify(loops.modules())), empty(loops),
                                            SemanticsKind::well_founded);
    EXPECT_TRUE(wf_cmp.equal);
    EXPECT_EQ(lits(loops.universe(), wf_cmp.modular), (Strings{"not p", "not q"}));

    const auto& q = loops.module("Q");
    for (auto kind : {SemanticsKind::fitting, SemanticsKind::well_founded})
        EXPECT_EQ(modular_eval({q}, empty(loops), kind), evaluate(kind, q, empty(loops)));

    // Wrong order is refused.
    auto reversed = loops.ground_plan(stratify(loops.modules()));
    std::swap(reversed[0], reversed[1]);
    EXPECT_THROW(modular_eval(reversed, empty(loops), SemanticsKind::well_founded), PreconditionError);
}

TEST(Semantics, WInequalities) {
    const auto s = load(loop_source);
    const auto& u = s.universe();
    const auto r = check_w_inequalities(s.module("P"), s.module("Q"), SignedSet(u.atom_count()));
    EXPECT_EQ(lits(u, r.union_plus), (Strings{"not p", "not q"}));
    EXPECT_EQ(lits(u, r.staged), (Strings{"not p", "not q"}));
    EXPECT_EQ(lits(u, r.sum), Strings{"not q"});
    EXPECT_TRUE(r.holds());
    EXPECT_TRUE(r.sum_strictly_below_union);

    const auto facts = load("module P defines p/0 { p :- p. p :- q. } module Q defines q/0 { q. }");
    const auto fr = check_w_inequalities(facts.module("P"), facts.module("Q"), SignedSet(facts.universe().atom_count()));
    const auto& fu = facts.universe();
    EXPECT_TRUE(fr.holds());
    EXPECT_EQ(lits(fu, fr.union_plus), Strings{"q"});
    EXPECT_EQ(lits(fu, fr.staged), (Strings{"p", "q"}));
    EXPECT_EQ(fr.sum, fr.union_plus);
    EXPECT_EQ(fr.reversed, fr.sum);
    EXPECT_THROW(check_w_inequalities(s.module("Q"), s.module("P"), SignedSet(u.atom_count())), PreconditionError);
}

TEST(Semantics, Residualize) {
    const auto u1 = Universe({}, {{"q", 0}});
    SignedSet not_q(1);
    not_q.neg.set(0);
    EXPECT_EQ(to_string(residualize(PartialInterpretation(not_q), SemanticsKind::well_founded, u1, {{"q", 0}}, "R")),
              "module R defines q/0 {\n  q :- q.\n}\n");

    const auto u2 = Universe({}, {{"q", 0}, {"r", 0}});
    SignedSet q_true(2);
    q_true.pos.set(u2.id({"q", {}}));
    const auto mf = residualize(PartialInterpretation(q_true), SemanticsKind::fitting, u2, {{"q", 0}, {"r", 0}}, "R");
    ASSERT_EQ(mf.rules().size(), 2u);
    EXPECT_EQ(to_string(mf.rules()[0]), "q.");
    EXPECT_EQ(to_string(mf.rules()[1]), "r :- r.");

    const auto mwf = residualize(PartialInterpretation(q_true), SemanticsKind::well_founded, u2, {{"q", 0}, {"r", 0}}, "R");
    EXPECT_EQ(to_string(mwf.rules()[1]), "r :- not r.");

    const auto paths = load(paths_source);
    const auto& pu = paths.universe();
    SignedSet one(pu.atom_count());
    one.pos.set(pu.id({"path", {Term::constant("1"), Term::constant("2")}}));
    const auto lm = residualize(PartialInterpretation(one), SemanticsKind::least_model, pu, {{"path", 2}}, "R");
    ASSERT_EQ(lm.rules().size(), 1u);
    EXPECT_EQ(to_string(lm.rules()[0]), "path(1,2).");
}

TEST(Semantics, PartialEvaluation) {
    const auto paths = load(paths_source);
    const auto lm = partial_eval_check(paths.module("paths"), paths.module("edges"), empty(paths),
                                       SemanticsKind::least_model);
    EXPECT_TRUE(lm.equal);
    EXPECT_EQ(lm.residual.rules().size(), 2u);

    const auto loops = load(loop_source);
    const auto w = partial_eval_check(loops.module("P"), loops.module("Q"), empty(loops), SemanticsKind::well_founded);
    EXPECT_TRUE(w.equal);
    ASSERT_EQ(w.residual.rules().size(), 1u);
    EXPECT_EQ(to_string(w.residual.rules()[0]), "q :- q.");
    EXPECT_EQ(lits(loops.universe(), w.with_start), (Strings{"not p", "not q"}));

    const auto f = load("module P defines p/0 { p :- p. p :- q. } module Q defines q/0 { q. }");
    const auto fr = partial_eval_check(f.module("P"), f.module("Q"), empty(f), SemanticsKind::fitting);
    EXPECT_TRUE(fr.equal);
    ASSERT_EQ(fr.residual.rules().size(), 1u);
    EXPECT_EQ(to_string(fr.residual.rules()[0]), "q.");
}

// Exhaustive monotonicity over all consistent pairs I <= J on a small program.
TEST(Semantics, OperatorsMonotoneExhaustive) {
    const auto s = load("module M defines p/0, q/0, r/0 { p :- q, not r. q :- not p. r :- r, q. r. }");
    const auto m = s.module("M");
    const std::size_t n = s.universe().atom_count();
    ASSERT_EQ(n, 3u);
    std::vector<SignedSet> all;
    for (unsigned code = 0; code < 27; ++code) {
        SignedSet x(n);
        for (std::size_t k = 0, c = code; k < n; ++k, c /= 3) {
            if (c % 3 == 1) x.pos.set(k);
            if (c % 3 == 2) x.neg.set(k);
        }
        all.push_back(x);
    }
    for (const auto& i : all)
        for (const auto& j : all) {
            if (!i.subset_of(j)) continue;
            EXPECT_TRUE(fitting_apply(m, PartialInterpretation(i)).literals().subset_of(
                fitting_apply(m, PartialInterpretation(j)).literals()));
            EXPECT_TRUE(wp_raw(m, i).subset_of(wp_raw(m, j)));
        }
}

TEST(Semantics, Names) {
    EXPECT_EQ(semantics_from_name("lfp"), SemanticsKind::least_model);
    EXPECT_EQ(semantics_from_name("fitting"), SemanticsKind::fitting);
    EXPECT_EQ(semantics_from_name("wf"), SemanticsKind::well_founded);
    EXPECT_THROW(semantics_from_name("stable"), DomainError);
}

TEST(Session, Query) {
    const auto program = parse_program(paths_source);
    const auto r = run_query(program.modules, parse_literals("path(1,Y)"), SemanticsKind::least_model);
    EXPECT_EQ(r.variables, Strings{"Y"});
    ASSERT_EQ(r.answers.size(), 2u);
    EXPECT_EQ(r.answers[0].values, Strings{"2"});
    EXPECT_EQ(r.answers[1].values, Strings{"3"});

    const auto odd = parse_program("module M defines p/0, q/0 { p :- not p. q. }");
    const auto u = run_query(odd.modules, parse_literals("p"), SemanticsKind::well_founded);
    EXPECT_TRUE(u.answers.empty());
    EXPECT_EQ(u.undefined.size(), 1u);
    const auto yes = run_query(odd.modules, parse_literals("q"), SemanticsKind::well_founded);
    EXPECT_EQ(yes.answers.size(), 1u);
}

TEST(Session, ModelView) {
    const auto s = load(loop_source);
    const auto view = view_model(s.universe(), wf(s.ground_union(), empty(s)), SemanticsKind::well_founded);
    EXPECT_EQ(to_json(view).dump(), R"({"false":["p","q"],"true":[],"undefined":[]})");
    const auto none = load("module M defines p/0 { }");
    const auto lm = view_model(none.universe(), PartialInterpretation(none.universe().atom_count()),
                               SemanticsKind::least_model);
    EXPECT_EQ(lm.false_atoms, Strings{"p"});
}
