#include "nlie/cartan.hpp"

#include <gtest/gtest.h>

using namespace nlie;

TEST(Cartan, CommutatorOfPartials) {
    VectorField d1 = VectorField::partial(2, 1);
    VectorField e = VectorField::term({1, 0}, 1);
    EXPECT_EQ(commutator(d1, e), d1);
    EXPECT_TRUE(commutator(d1, VectorField::partial(2, 2)).is_zero());
}

TEST(Cartan, Divergence) {
    VectorField X({Poly::parse(2, "x1^2"), Poly::parse(2, "x1*x2")});
    EXPECT_EQ(divergence(X), Poly::parse(2, "3 * x1"));
}

TEST(Cartan, GradedParts) {
    VectorField X({Poly::parse(2, "1 + x1^2"), Poly::parse(2, "x2")});
    auto parts = graded_parts(X);
    EXPECT_EQ(parts.size(), 3u);
    EXPECT_EQ(graded_part(X, -1), VectorField::partial(2, 1));
    EXPECT_EQ(graded_part(X, 1), VectorField::term({2, 0}, 1));
}

TEST(Cartan, DegreeZeroPartAsMatrix) {
    VectorField X = VectorField::term({0, 1}, 1);  // x2 D1 -> E_21
    QMat M = gl_of_degree0(X);
    EXPECT_EQ(M[1][0], 1);
    EXPECT_EQ(M[0][1], 0);
}

TEST(Cartan, DensityLaw) {
    // n = 3: X h - div(X) h / 2
    VectorField X = VectorField::term({1, 0}, 1);
    EXPECT_EQ(density_action(X, Poly::parse(2, "x1")), Poly::parse(2, "1/2 * x1"));
}
