#include "nlie/verma.hpp"

#include <gtest/gtest.h>

using namespace nlie;

TEST(Verma, TranslationsRaiseDegree) {
    VermaSlice S(scalar_module(2, 1), 2);
    VermaElement v = basis_element(2, 0);
    VermaElement r = S.act(VectorField::partial(2, 1), v);
    EXPECT_EQ(r.max_degree(), 1);
}

TEST(Verma, ActionIsRepresentation) {
    VermaSlice S(exceptional_module(2, 1), 2);
    VectorField X = VectorField::term({1, 0}, 2), Y = VectorField::term({1, 1}, 1);
    VermaElement v = basis_element(2, 0, {1, 0});
    VermaElement lhs = S.act(commutator(X, Y), v);
    VermaElement rhs = S.act(X, S.act(Y, v)) - S.act(Y, S.act(X, v));
    EXPECT_EQ(lhs, rhs);
}

TEST(Verma, ScalarModuleHasNoDegreeOneSingularVectors) {
    for (int c : {-3, -2, 1, 2, 3}) {
        VermaSlice S(scalar_module(2, c), 2);
        EXPECT_TRUE(singular_vectors(S, 1).empty()) << "c=" << c;
    }
}

// with the trivial module every D_a v is killed by the positive part
TEST(Verma, TrivialModuleHasTranslationSingularVectors) {
    VermaSlice S(scalar_module(2, 0), 2);
    EXPECT_EQ(singular_vectors(S, 1).size(), 2u);
}

TEST(Verma, ExceptionalModuleHasSingularVectors) {
    VermaSlice S(exceptional_module(2, 1), 2);
    auto sv = singular_vectors(S, 1);
    ASSERT_FALSE(sv.empty());
    SingPlus sp(S);
    EXPECT_TRUE(sp.contains(sv[0]));
    EXPECT_GE(sp.dim(1), sv.size());
}

TEST(Verma, DegreeOverflow) {
    VermaSlice S(scalar_module(2, 1), 1);
    VermaElement v = basis_element(2, 0, {1, 1});
    EXPECT_THROW(S.act(VectorField::partial(2, 1), v), DegreeOverflowError);
}
