#include <gtest/gtest.h>

#include "modsem/errors.hpp"
#include "modsem/grounding.hpp"
#include "modsem/parser.hpp"

using namespace modsem;

namespace {

const char* paths_source = R"(
% edges and their transitive closure
module edges defines e/2 {
  e(1,2).
  e(2,3).
}
module paths defines path/2 {
  path(X,Y) :- e(X,Y).
  path(X,Y) :- e(X,Z), path(Z,Y).
}
)";

const char* loop_source = R"(
module P defines p/0 {
  p :- p.
  p :- q.
}
module Q defines q/0 {
  q :- q.
}
)";

Module only(const char* text) { return parse_program(text).modules.at(0); }

} // namespace

TEST(Parser, PathsProgram) {
    const auto program = parse_program(paths_source);
    ASSERT_EQ(program.modules.size(), 2u);
    std::size_t rules = 0;
    for (const auto& m : program.modules) rules += m.rules().size();
    EXPECT_EQ(rules, 4u);
    EXPECT_EQ(program.locations[1].line, 7u);
    EXPECT_EQ(to_string(program.modules[1].rules()[1]), "path(X,Y) :- e(X,Z), path(Z,Y).");
}

TEST(Parser, SyntaxErrorLocation) {
    try {
        parse_program("module m defines p/1 {\n  p(X) :- q(X,\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse_program("module m defines p/0 { p :- q(, }");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 31u);
    }
}

TEST(Parser, HeadOutsideDefines) {
    try {
        parse_program("module m defines p/0 {\n  r :- p.\n}");
        FAIL() << "expected a semantic error";
    } catch (const SemanticError& e) {
        EXPECT_NE(std::string(e.what()).find("r :- p."), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos) << e.what();
    }
}

TEST(Parser, SemanticErrors) {
    EXPECT_THROW(parse_program("module m defines p/1 { p(X) :- q(X). q(1,2). }"), SemanticError);
    EXPECT_THROW(parse_program("module m defines p/0 { p. } module m defines q/0 { q. }"), SemanticError);
    EXPECT_THROW(parse_program("module m defines p/1 { p(X) :- not q(X). }"), SemanticError);
    EXPECT_THROW(parse_program("module m defines p/1 { p(X). }"), SemanticError);
}

TEST(Parser, RoundTrip) {
    for (const char* text : {paths_source, loop_source,
                             "module a defines w/1 { w(X) :- e(X), not w(X). w(c1). }\nmodule b defines e/1 {}"}) {
        const auto first = parse_program(text);
        const auto printed = print_program(first);
        const auto second = parse_program(printed);
        EXPECT_EQ(first, second) << printed;
        EXPECT_EQ(printed, print_program(second));
    }
}

TEST(Parser, Literals) {
    const auto lits = parse_literals("q, not r(1, X)");
    ASSERT_EQ(lits.size(), 2u);
    EXPECT_TRUE(lits[0].positive);
    EXPECT_FALSE(lits[1].positive);
    EXPECT_EQ(to_string(lits[1]), "not r(1,X)");
    EXPECT_TRUE(parse_literals("").empty());
    EXPECT_THROW(parse_literals("q,"), ParseError);
}

TEST(Modules, Precedes) {
    const auto program = parse_program(loop_source);
    const auto& p = program.modules[0];
    const auto& q = program.modules[1];
    EXPECT_TRUE(precedes(p, q));
    const auto facts = only("module f defines q/0 { q. }");
    EXPECT_TRUE(precedes(facts, facts));
}

TEST(Modules, PrecedesReversed) {
    const auto program = parse_program(loop_source);
    // P's body mentions q, which Q defines.
    EXPECT_FALSE(precedes(program.modules[1], program.modules[0]));
}

TEST(Modules, Union) {
    const auto program = parse_program(loop_source);
    const auto& p = program.modules[0];
    const auto& q = program.modules[1];
    const auto pq = union_modules(p, q);
    EXPECT_EQ(pq.rules().size(), 3u);
    EXPECT_EQ(pq.defines().size(), 2u);
    EXPECT_FALSE(pq.overlap_warning());
    EXPECT_EQ(union_modules(p, p), p);
    const auto other = only("module P2 defines p/0 { p. }");
    EXPECT_TRUE(union_modules(p, other).overlap_warning());
}

TEST(Modules, Stratify) {
    const auto program = parse_program(loop_source);
    EXPECT_EQ(stratify(program.modules).names(), (std::vector<std::string>{"Q", "P"}));
    const auto independent = parse_program("module b defines y/0 { y. } module a defines x/0 { x. }");
    EXPECT_EQ(stratify(independent.modules).names(), (std::vector<std::string>{"a", "b"}));
    const auto cyclic = parse_program("module a defines x/0 { x :- y. } module b defines y/0 { y :- x. }");
    EXPECT_THROW(stratify(cyclic.modules), SemanticError);
    const auto overlap = parse_program("module a defines x/0 { x. } module b defines x/0 { x. }");
    EXPECT_THROW(stratify(overlap.modules), SemanticError);
}

TEST(Modules, WrapGoal) {
    const auto program = parse_program(paths_source);
    PredicateSet existing;
    for (const auto& m : program.modules)
        for (const auto& sym : m.predicates()) existing.insert(sym);

    const auto wrapped = wrap_goal(parse_literals("path(1,Y)"), existing);
    ASSERT_EQ(wrapped.rules().size(), 1u);
    EXPECT_EQ(to_string(wrapped.rules()[0]), "answer(Y) :- path(1,Y).");
    EXPECT_EQ(wrapped.defines(), (PredicateSet{{"answer", 1}}));

    EXPECT_EQ(to_string(wrap_goal(parse_literals("p"), {}).rules()[0]), "answer :- p.");
    EXPECT_EQ(to_string(wrap_goal({}, {}).rules()[0]), "answer.");
    EXPECT_THROW(wrap_goal(parse_literals("path(1,Y)"), existing, "path"), SemanticError);
    EXPECT_THROW(wrap_goal(parse_literals("not path(1,Y)"), existing), SemanticError);
}

TEST(Grounding, RuleInstances) {
    const auto m = only("module m defines p/1 { p(X) :- e(X). }");
    const auto g = ground({m}, {"1", "2"});
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].rules().size(), 2u);
    EXPECT_EQ(g[0].universe().render(g[0].rules()[0].head), "p(1)");
}

TEST(Grounding, Propositional) {
    const auto program = parse_program(loop_source);
    const auto g = ground(program.modules);
    EXPECT_EQ(g[0].universe().atom_count(), 2u);
    EXPECT_EQ(g[0].rules().size(), 2u);
    EXPECT_EQ(g[1].rules().size(), 1u);
    EXPECT_EQ(g[0].universe_ptr(), g[1].universe_ptr());
}

TEST(Grounding, SafetyError) {
    const Module unsafe("m", {{{"p", {Term::variable("X")}}, {{false, {"q", {Term::variable("X")}}}}}}, {{"p", 1}});
    EXPECT_THROW(ground({unsafe}, {"1"}), SemanticError);
}

TEST(Grounding, MonotoneInConstants) {
    const auto m = only("module m defines p/2 { p(X,Y) :- e(X), e(Y), not p(Y,X). }");
    const auto small = ground({m}, {"1"});
    const auto large = ground({m}, {"1", "2", "3"});
    for (const auto& r : small[0].rules()) {
        const auto& su = small[0].universe();
        const auto& lu = large[0].universe();
        GroundRule mapped{lu.id(su.atom(r.head)), {}};
        for (const auto& l : r.body) mapped.body.push_back({l.positive, lu.id(su.atom(l.atom))});
        EXPECT_NE(std::find(large[0].rules().begin(), large[0].rules().end(), mapped), large[0].rules().end());
    }
    EXPECT_EQ(large[0].rules().size(), 9u);
}

TEST(Grounding, Budget) {
    const auto m = only("module m defines p/3 { p(X,Y,Z) :- e(X), e(Y), e(Z). }");
    std::set<std::string> constants;
    for (int i = 0; i < 50; ++i) constants.insert("c" + std::to_string(i));
    EXPECT_THROW(ground({m}, constants, 1000), BudgetExceeded);
}
