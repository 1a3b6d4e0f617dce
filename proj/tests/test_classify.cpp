#include "nlie/classify.hpp"

#include <gtest/gtest.h>

using namespace nlie;

namespace {
Weight W(std::initializer_list<int> xs) {
    Weight w;
    for (int x : xs) w.push_back(Q(x));
    return w;
}
} // namespace

TEST(Classify, PredicateN3) {
    EXPECT_TRUE(classification_predicate(3, W({2, 2})).accepted);
    EXPECT_TRUE(classification_predicate(3, W({1, -2})).accepted);
    EXPECT_FALSE(classification_predicate(3, W({3, 1})).accepted);
    EXPECT_TRUE(classification_predicate(3, W({0, 0})).accepted);
    Prediction p = classification_predicate(3, W({-1, -1}));
    EXPECT_TRUE(p.accepted);
    EXPECT_EQ(p.kind, ModuleKind::J);
}

TEST(Classify, PredicateN4) {
    EXPECT_FALSE(classification_predicate(4, W({0, -1, -1})).accepted);
    EXPECT_FALSE(classification_predicate(4, W({0, 0, -1})).accepted);
    Prediction p = classification_predicate(4, W({-1, -1, -1}));
    EXPECT_TRUE(p.accepted);
    EXPECT_EQ(kind_label(p.kind, p.p), "J(F^3)");
}

TEST(Classify, BruteForceAgreesOnSmallN3Points) {
    for (auto l : {W({2, 2}), W({1, -2}), W({3, 1}), W({-1, -1})}) {
        Verdict v = brute_verify(3, l);
        Prediction p = classification_predicate(3, l);
        EXPECT_EQ(v.accepted, p.accepted);
        EXPECT_EQ(v.kind, p.kind);
    }
}

TEST(Classify, RejectionCarriesWitness) {
    Verdict v = brute_verify(3, W({3, 1}));
    ASSERT_FALSE(v.accepted);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_FALSE(v.witness->image.is_zero());
}

TEST(Classify, ThreadedSearchFindsSameWitness) {
    VerifyOptions one, four;
    four.jobs = 4;
    Verdict a = brute_verify(3, W({2, 0}), one), b = brute_verify(3, W({2, 0}), four);
    EXPECT_EQ(a.accepted, b.accepted);
    ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
    if (a.witness) EXPECT_EQ(a.witness->spec, b.witness->spec);
}

TEST(Classify, DominantBox) {
    EXPECT_EQ(dominant_box(3, -3, 3).size(), 28u);
    for (auto& l : dominant_box(4, -1, 1)) EXPECT_TRUE(is_dominant(l));
}
