#include "nlie/props.hpp"

#include <gtest/gtest.h>

using namespace nlie;

TEST(Brackets, WIsJacobianWithUnitRow) {
    // det [[x1, x2^2, 1], [1, 0, 0], [0, 2 x2, 0]] = 2 x2
    Poly r = bracket_w({Poly::parse(2, "x1"), Poly::parse(2, "x2^2"), Poly::parse(2, "1")});
    EXPECT_EQ(r, Poly::parse(2, "2 * x2")) << r.to_string();
}

TEST(Brackets, WAntisymmetric) {
    std::vector<Poly> a{Poly::parse(2, "x1^2"), Poly::parse(2, "x2"), Poly::parse(2, "x1*x2")};
    std::vector<Poly> b{a[1], a[0], a[2]};
    EXPECT_EQ(bracket_w(a), -bracket_w(b));
}

TEST(Brackets, SIsJacobian) {
    Poly r = bracket_s({Poly::var(3, 1), Poly::var(3, 2), Poly::var(3, 3)});
    EXPECT_EQ(r, Poly::constant(3, 1));
}

TEST(Brackets, ArityChecked) {
    EXPECT_THROW(bracket_w({Poly::var(2, 1), Poly::var(2, 2)}), std::exception);
}

class JacobiSuite : public ::testing::TestWithParam<std::tuple<Algebra, int>> {};

TEST_P(JacobiSuite, ResidualVanishes) {
    auto [alg, n] = GetParam();
    JacobiResult r = jacobi_suite(alg, n, 50, 11);
    EXPECT_EQ(r.failures, 0) << r.counterexample;
}

INSTANTIATE_TEST_SUITE_P(AllAlgebras, JacobiSuite,
                         ::testing::Combine(::testing::Values(Algebra::W, Algebra::S, Algebra::VP, Algebra::SW),
                                            ::testing::Values(3, 4)));

TEST(Brackets, CorruptedBracketIsCaught) {
    JacobiResult r = jacobi_suite(Algebra::W, 3, 100, 5, 2, true, true);
    EXPECT_GT(r.failures, 0);
}
