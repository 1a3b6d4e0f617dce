#include "nlie/glrep.hpp"

#include <gtest/gtest.h>

using namespace nlie;

namespace {
Weight W(std::initializer_list<int> xs) {
    Weight w;
    for (int x : xs) w.push_back(Q(x));
    return w;
}

Q mult_at(const std::vector<WeightMultiplicity>& ms, const std::vector<int>& beta) {
    for (auto& m : ms)
        if (m.beta == beta) return m.mult;
    return 0;
}
} // namespace

TEST(GLRep, Dominance) {
    EXPECT_TRUE(is_dominant(W({2, 1, 1})));
    EXPECT_FALSE(is_dominant(W({0, 1})));
    EXPECT_FALSE(is_dominant({Q(1, 2), Q(0)}));
}

TEST(GLRep, SlRoundTrip) {
    Weight l = W({3, 1, -2});
    EXPECT_EQ(from_sl(to_sl(l)), l);
}

TEST(GLRep, WeylDimension) {
    EXPECT_EQ(weyl_dim(SLWeight{{1, 1}, 0}), 8);
    EXPECT_EQ(weyl_dim(SLWeight{{2, 0}, 0}), 6);
    EXPECT_EQ(weyl_dim(SLWeight{{1, 0, 0}, 0}), 4);
}

TEST(GLRep, FreudenthalAdjointZeroWeight) {
    auto ms = freudenthal(SLWeight{{1, 1}, 0}, 2);
    EXPECT_EQ(mult_at(ms, {1, 1}), 2);
    EXPECT_EQ(mult_at(ms, {1, 0}), 1);
}

TEST(GLRep, FreudenthalSumsToWeylDimension) {
    SLWeight l{{2, 1}, 0};
    Q total = 0;
    for (auto& m : freudenthal(l, 20)) total += m.mult;
    EXPECT_EQ(total, weyl_dim(l));
}

TEST(GLRep, ContravariantRanksMatchFreudenthal) {
    Weight lam = W({3, 1, 0});
    auto ms = freudenthal(to_sl(lam), 3);
    for (auto& w : contravariant_ranks(lam, 3)) {
        std::vector<int> beta;
        int acc = 0;
        for (std::size_t t = 0; t + 1 < w.offset.size(); ++t) beta.push_back(acc += w.offset[t]);
        EXPECT_EQ(Q(static_cast<long>(w.rank)), mult_at(ms, beta));
    }
}

TEST(GLRep, ExceptionalWeights) {
    EXPECT_EQ(exceptional_weight(3, 3), W({-1, -1, -1}));
    EXPECT_EQ(exceptional_index(W({0, -1})), 1);
    EXPECT_FALSE(exceptional_index(W({2, 1})).has_value());
}

TEST(GLRep, TruncatedIrreducibleOfAdjointIsComplete) {
    GLModuleSlice F = truncated_irreducible(W({1, 0, -1}), 4);
    EXPECT_TRUE(F.complete);
    EXPECT_EQ(F.dim(), 8);
}

// [E_ij, E_jl] = E_il on a module built from the quotient
TEST(GLRep, CommutationRelationsHold) {
    GLModuleSlice F = truncated_irreducible(W({2, 1, 0}), 4);
    int k = F.k;
    for (int c = 0; c < F.dim(); ++c) {
        QVec v = F.unit(c);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int l = 0; l < k; ++l) {
                    if (i == l) continue;
                    QVec a = F.apply(i, j, F.apply(j, l, v));
                    QVec b = F.apply(j, l, F.apply(i, j, v));
                    QVec e = F.apply(i, l, v);
                    for (std::size_t t = 0; t < a.size(); ++t) EXPECT_EQ(a[t] - b[t], e[t]);
                }
    }
}

TEST(GLRep, ExceptionalModuleDimension) {
    EXPECT_EQ(exceptional_module(3, 2).dim(), 3);
    EXPECT_EQ(scalar_module(3, 2).dim(), 1);
}
