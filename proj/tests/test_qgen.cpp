#include "nlie/qgen.hpp"

#include <gtest/gtest.h>

using namespace nlie;

TEST(QGen, EnumerationCounts) {
    EXPECT_EQ(enumerate_specs(3, 2, 4).size(), 30u);
    EXPECT_EQ(enumerate_specs(4, 2, 6).size(), 399u);
}

TEST(QGen, ExplicitEqualsAbstractAtN3) {
    for (auto& s : enumerate_specs(3, 2, 4)) EXPECT_TRUE(explicit_qgen(s) == abstract_qgen(s)) << s.to_string();
}

TEST(QGen, LiteralReadingDiffers) {
    std::size_t same = 0;
    auto specs = enumerate_specs(3, 2, 4);
    for (auto& s : specs) same += explicit_qgen(s, Reading::Literal) == abstract_qgen(s);
    EXPECT_LT(same, specs.size());
}

TEST(QGen, CanonicalizeSignAndRepeat) {
    GeneratorSpec s{{{1, 0}, {0, 0}, {2, 0}, {1, 1}}};
    EXPECT_EQ(s.canonicalize(), -1);
    GeneratorSpec t{{{1, 0}, {1, 0}, {0, 0}, {1, 1}}};
    EXPECT_EQ(t.canonicalize(), 0);
}

TEST(QGen, ValidateRejectsBadArity) {
    GeneratorSpec s{{{0, 1, 0}, {1, 0}, {0, 0}, {1, 1}}};
    EXPECT_THROW(s.validate(), std::exception);
}

TEST(QGen, DefaultDepth) {
    EXPECT_EQ(default_depth(3), 2);
    EXPECT_EQ(default_depth(5), 6);
}

TEST(QGen, Equation22AtTwoOne) {
    ReproReport r = reproduce_equation(22, 3, {1, 2, 0, 0, 0}, {Q(2), Q(1)});
    EXPECT_TRUE(r.match) << r.lhs.to_string() << " vs " << r.rhs.to_string();
    ASSERT_EQ(r.lhs.terms().size(), 1u);
    EXPECT_EQ(r.lhs.terms().begin()->second, 8);
}

TEST(QGen, ContradictoryOrderingHasNoTuples) {
    for (int n = 3; n <= 6; ++n) EXPECT_TRUE(admissible_params(43, n).empty());
}

TEST(QGen, UnknownEquationThrows) {
    EXPECT_THROW(reproduce_equation(999, 3, {}, {Q(0), Q(0)}), std::exception);
}
