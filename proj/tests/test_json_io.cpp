#include "nlie/json_io.hpp"

#include <gtest/gtest.h>

using namespace nlie;

TEST(JsonIO, FieldRoundTrip) {
    VectorField X({Poly::parse(2, "1/2 * x1^2"), Poly::parse(2, "-3 + x2")});
    EXPECT_EQ(field_from_json(to_json(X), 2), X);
}

TEST(JsonIO, FieldArityChecked) {
    EXPECT_THROW(field_from_json(json::array({"x1"}), 2), ArityError);
}

TEST(JsonIO, VermaRoundTrip) {
    VermaElement v;
    v.add({{1, 0}, 0}, Q(2, 3));
    v.add({{0, 2}, 1}, -1);
    EXPECT_EQ(verma_from_json(to_json(v), 2), v);
    EXPECT_EQ(verma_from_json(json::parse(R"([{"d":[1,0],"v":0,"c":5}])"), 2).terms().begin()->second, 5);
}

TEST(JsonIO, ParseWeight) {
    Weight w = parse_weight("2,-1/2,0");
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[1], Q(-1, 2));
}

TEST(JsonIO, VerdictShape) {
    Verdict v = brute_verify(3, {Q(3), Q(1)});
    json j = to_json(v);
    EXPECT_FALSE(j["accepted"].get<bool>());
    EXPECT_TRUE(j["witness"].contains("spec_text"));
}
