#include <gtest/gtest.h>

#include "modsem/errors.hpp"
#include "modsem/interpretation.hpp"
#include "modsem/lattice.hpp"

using namespace modsem;

namespace {

// a < c, b < c, with a and b having no meet.
FinitePoset vee() {
    return FinitePoset("vee", {"a", "b", "c"},
                       {{true, false, true}, {false, true, true}, {false, false, true}});
}

} // namespace

TEST(Lattice, PowersetOrder) {
    const auto p = make_powerset_lattice({"a", "b"});
    EXPECT_TRUE(p.leq(p.element({"a"}), p.element({"a", "b"})));
    EXPECT_FALSE(p.leq(p.element({"a"}), p.element({"b"})));
    EXPECT_EQ(p.join(p.element({"a"}), p.element({"b"})), p.element({"a", "b"}));
    EXPECT_EQ(p.meet(p.element({"a"}), p.element({"b"})), p.bottom());
    EXPECT_EQ(p.render(p.top()), "{a,b}");
    EXPECT_EQ(p.render(p.bottom()), "{}");
    EXPECT_THROW(p.element({"z"}), DomainError);
}

TEST(Lattice, PowersetSizes) {
    EXPECT_EQ(make_powerset_lattice({"a", "b"}).size(), 4u);
    EXPECT_EQ(make_powerset_lattice({"a", "b", "c"}).size(), 8u);
    const auto empty = make_powerset_lattice({});
    EXPECT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty.bottom(), empty.top());
    EXPECT_THROW(make_powerset_lattice({"a", "a"}), DomainError);
    std::vector<std::string> many;
    for (int i = 0; i < 21; ++i) many.push_back("x" + std::to_string(i));
    EXPECT_THROW(make_powerset_lattice(many), BudgetExceeded);
}

TEST(Lattice, PowersetTableMatchesMasks) {
    const auto p = make_powerset_lattice({"a", "b", "c"});
    const auto l = p.to_lattice("p3");
    ASSERT_EQ(l.size(), 8u);
    for (Element x = 0; x < 8; ++x)
        for (Element y = 0; y < 8; ++y) {
            EXPECT_EQ(l.leq(x, y), p.leq(x, y));
            EXPECT_EQ(l.join(x, y), p.join(x, y));
            EXPECT_EQ(l.meet(x, y), p.meet(x, y));
        }
}

TEST(Lattice, Chain) {
    const auto c = make_builtin(BuiltinKind::chain, 4);
    EXPECT_EQ(c.size(), 4u);
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y) {
            EXPECT_TRUE(c.leq(x, y) || c.leq(y, x));
            EXPECT_EQ(c.join(x, y), std::max(x, y));
            EXPECT_EQ(c.meet(x, y), std::min(x, y));
        }
    EXPECT_EQ(c.bottom(), 0u);
    EXPECT_EQ(c.top(), 3u);
}

TEST(Lattice, BooleanDiamond) {
    const auto b = make_builtin(BuiltinKind::boolean, 2);
    ASSERT_EQ(b.size(), 4u);
    EXPECT_FALSE(b.leq(1, 2));
    EXPECT_FALSE(b.leq(2, 1));
    EXPECT_EQ(b.join(1, 2), 3u);
    EXPECT_EQ(b.meet(1, 2), 0u);
    EXPECT_EQ(b.label(3), "{a,b}");
}

TEST(Lattice, AppendixChain) {
    const auto c = make_builtin(BuiltinKind::appendix_chain);
    ASSERT_EQ(c.size(), 3u);
    const Element one = *c.find("1"), two = *c.find("2"), three = *c.find("3");
    EXPECT_TRUE(c.lt(one, two));
    EXPECT_TRUE(c.lt(two, three));
    EXPECT_EQ(c.bottom(), one);
    EXPECT_EQ(c.top(), three);
}

TEST(Lattice, BuiltinNames) {
    EXPECT_EQ(builtin_from_name("chain(4)").size(), 4u);
    EXPECT_EQ(builtin_from_name("boolean(2)").size(), 4u);
    EXPECT_EQ(builtin_from_name("appendix_chain").size(), 3u);
    EXPECT_THROW(builtin_from_name("chain(x)"), DomainError);
    EXPECT_THROW(builtin_from_name("torus(3)"), DomainError);
    EXPECT_THROW(make_builtin(BuiltinKind::chain, 0), DomainError);
    EXPECT_THROW(make_builtin(BuiltinKind::chain, 65), BudgetExceeded);
    EXPECT_THROW(make_builtin(BuiltinKind::boolean, 7), BudgetExceeded);
    EXPECT_EQ(make_builtin(BuiltinKind::boolean, 0).size(), 1u);
}

TEST(Lattice, PartialJoinAndMeet) {
    const auto v = vee();
    EXPECT_FALSE(v.is_lattice());
    EXPECT_EQ(v.try_join(0, 1), std::optional<Element>(2));
    EXPECT_FALSE(v.try_meet(0, 1).has_value());
    EXPECT_THROW(v.meet(0, 1), UndefinedBound);
    EXPECT_FALSE(v.least().has_value());
    EXPECT_THROW(FiniteLattice{vee()}, DomainError);
}

TEST(Lattice, RejectsNonOrders) {
    // not antisymmetric
    EXPECT_THROW(FinitePoset("x", {"a", "b"}, {{true, true}, {true, true}}), DomainError);
    // not reflexive
    EXPECT_THROW(FinitePoset("x", {"a"}, {{false}}), DomainError);
    // not transitive: a<=b, b<=c, but not a<=c
    EXPECT_THROW(FinitePoset("x", {"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}),
                 DomainError);
    // shape mismatch
    EXPECT_THROW(FinitePoset("x", {"a", "b"}, {{true}}), DomainError);
}

TEST(Lattice, OutOfRangeElement) {
    const auto c = make_builtin(BuiltinKind::chain, 2);
    EXPECT_THROW(c.leq(0, 5), DomainError);
}

TEST(Interpretation, LiteralJoin) {
    // atoms: p = 0, q = 1
    const LiteralPoset lp(2);
    boost::dynamic_bitset<> p(2), q(2), none(2);
    p.set(0);
    q.set(1);
    const PartialInterpretation pos_p(SignedSet(p, none));
    const PartialInterpretation neg_q(SignedSet(none, q));
    const PartialInterpretation neg_p(SignedSet(none, p));
    EXPECT_EQ(lp.join(pos_p, neg_q), PartialInterpretation(SignedSet(p, q)));
    EXPECT_THROW(lp.join(pos_p, neg_p), UndefinedBound);
    EXPECT_FALSE(lp.try_join(pos_p, neg_p).has_value());
    EXPECT_TRUE(lp.leq(lp.bottom(), pos_p));
    EXPECT_FALSE(lp.leq(pos_p, neg_p));
    EXPECT_EQ(lp.meet(pos_p, neg_q), lp.bottom());
    EXPECT_THROW(PartialInterpretation(SignedSet(p, p)), UndefinedBound);
}

TEST(Interpretation, InclusionOrder) {
    const InclusionOrder o(3);
    boost::dynamic_bitset<> a(3), b(3);
    a.set(0);
    b.set(1);
    EXPECT_EQ(o.join(a, b).count(), 2u);
    EXPECT_TRUE(o.meet(a, b).none());
    EXPECT_TRUE(o.leq(o.bottom(), a));
    EXPECT_THROW(o.leq(a, boost::dynamic_bitset<>(4)), DomainError);
}
