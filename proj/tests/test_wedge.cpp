#include "nlie/wedge.hpp"

#include <gtest/gtest.h>

using namespace nlie;

namespace {
Poly P(int nv, const char* s) { return Poly::parse(nv, s); }
}

TEST(Wedge, AdFieldExamples) {
    VectorField a = ad_field({P(2, "1"), P(2, "x1")});
    EXPECT_EQ(a, VectorField::partial(2, 2));
    VectorField b = ad_field({P(2, "x1"), P(2, "x2")});
    EXPECT_EQ(b, VectorField({P(2, "-1 * x1"), P(2, "-1 * x2")}));
    VectorField c = ad_field({P(3, "x1"), P(3, "x2"), P(3, "x3")});
    EXPECT_EQ(c, VectorField({P(3, "x1"), P(3, "x2"), P(3, "x3")}));
}

TEST(Wedge, ChainNormalFormSignAndRepeat) {
    WedgeElement w(3);
    w.add_chain({{0, 1}, {1, 0}}, 1);
    w.add_chain({{1, 0}, {0, 1}}, 1);
    EXPECT_TRUE(w.is_zero());
    WedgeElement r(3);
    r.add_chain({{1, 0}, {1, 0}}, 5);
    EXPECT_TRUE(r.is_zero());
}

TEST(Wedge, LieBracketExample) {
    WedgeElement a(3), b(3), expect(3);
    a.add_chain({{1, 0}, {0, 1}}, 1);
    b.add_chain({{0, 0}, {1, 0}}, 1);
    expect.add_chain({{0, 0}, {1, 0}}, 1);
    EXPECT_EQ(lie_bracket(a, b), expect);
}

TEST(Wedge, AdIsHomomorphismOnSamples) {
    WedgeElement a(3), b(3);
    a.add_chain({{2, 0}, {0, 1}}, Q(1, 2));
    a.add_chain({{0, 0}, {1, 1}}, 3);
    b.add_chain({{1, 0}, {0, 2}}, -1);
    EXPECT_EQ(ad_to_field(lie_bracket(a, b)), commutator(ad_to_field(a), ad_to_field(b)));
}

TEST(Wedge, MonomialEnumeration) {
    EXPECT_EQ(monomials_up_to(2, 2).size(), 6u);
    EXPECT_EQ(monomials_up_to(3, 4).size(), 35u);
}

TEST(Wedge, GeneratorAnnihilatesAdjointModule) {
    UGenerator g = abstract_qgen(std::vector<Monomial>{{1, 0}, {0, 1}, {2, 0}, {1, 1}});
    for (auto& m : monomials_up_to(2, 4)) EXPECT_TRUE(density_apply(g, Poly::mono(m)).is_zero());
}

TEST(Wedge, KernelAtLowDegree) {
    KernelReport k = ker_ad_injectivity(3, 1);
    EXPECT_EQ(k.chains, k.rank + k.kernel_dim);
    EXPECT_EQ(k.kernel_dim, 0u);
}

TEST(Wedge, KernelIsForcedByDimensionAtN4) {
    // 120 chains map into a space of dimension 3 * 35
    KernelReport k = ker_ad_injectivity(4, 2);
    EXPECT_EQ(k.chains, 120u);
    EXPECT_LE(k.rank, 105u);
    EXPECT_GT(k.kernel_dim, 0u);
}
