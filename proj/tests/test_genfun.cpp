#include <gtest/gtest.h>

#include <thomgen/exprparse.hpp>
#include <thomgen/genfun.hpp>

using namespace thomgen;

TEST(DimensionVector, Validation) {
  EXPECT_THROW(DimensionVector({1, -1}), std::invalid_argument);
  EXPECT_THROW(DimensionVector({0, 0}), std::invalid_argument);
  EXPECT_EQ(DimensionVector({0, 1, 1, 0, 1}).mu(), 3);
  EXPECT_EQ(DimensionVector({2, 1}).str(), "2,1");
}

TEST(WeightProfile, BlocksAndGaps) {
  auto wp = weight_profile({2, 1});
  EXPECT_EQ(wp.weights, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(wp.exponents, (std::vector<int>{1, 0, 0}));
  // Zero blocks leave gaps in the weights rather than being renumbered.
  wp = weight_profile({0, 1, 1, 0, 1});
  EXPECT_EQ(wp.weights, (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(wp.exponents, (std::vector<int>{0, 0, 0}));
  wp = weight_profile({3});
  EXPECT_EQ(wp.exponents, (std::vector<int>{2, 1, 0}));
}

TEST(KFunction, DenominatorOfK21) {
  auto den = k_denominator({2, 1});
  ASSERT_EQ(den.size(), 3u);
  EXPECT_EQ(den[0].str(), "t3 - 2*t1");
  EXPECT_EQ(den[1].str(), "t3 - t1 - t2");
  EXPECT_EQ(den[2].str(), "t3 - 2*t2");
  // The gap in (0,1,1,0,1) excludes t3 - 2 t2 (weight 6 > 5).
  EXPECT_EQ(k_denominator({0, 1, 1, 0, 1}).size(), 2u);
}

TEST(KFunction, HomogeneousDegree) {
  EXPECT_EQ(k_function({2, 1}).homogeneous_degree(), 1);
  EXPECT_EQ(k_function({1}).homogeneous_degree(), 0);
  EXPECT_EQ(k_function({3}).homogeneous_degree(), 6);
  EXPECT_EQ(k_function({1, 1, 1}).homogeneous_degree(), 0);
  // K~ has the same degree as K.
  for (auto d : {DimensionVector{2, 1}, DimensionVector{0, 1, 1, 1}, DimensionVector{3, 3}})
    EXPECT_EQ(ktilde_function(d).homogeneous_degree(), k_function(d).homogeneous_degree());
}

TEST(KFunction, ExpandedNumeratorOfK21) {
  auto gf = k_function({2, 1});
  EXPECT_EQ(gf.numerator(), parse_factor("t1*(t2-t1)*(t3-t1)*(t3-t2)", 3));
  EXPECT_EQ(ktilde_function({0, 1, 1, 1}).numerator(), parse_factor("t2*t3^2", 3));
}

TEST(Reduce, CancelsDividingFactors) {
  auto gf = k_function({2, 1}).multiplied(parse_factor("2*(t3-t1-t2)", 3));
  EXPECT_EQ(gf.denominator().size(), 3u);
  auto r = reduce(gf);
  EXPECT_EQ(r.denominator().size(), 2u);
  EXPECT_TRUE(gf_equal_exact(gf, r));
}

TEST(Reduce, NothingToCancel) {
  auto gf = k_function({2, 1});
  EXPECT_EQ(reduce(gf).denominator().size(), 3u);
}

TEST(GfEqualExact, SameFunctionDifferentFactorization) {
  auto a = k_function({2, 1}).multiplied(parse_factor("2*(t3-t1-t2)", 3));
  auto b = k_function({2, 1}).multiplied(parse_factor("2*t3-2*t1-2*t2", 3));
  auto c = k_function({2, 1}).multiplied(parse_factor("t3-t1-t2", 3), 2);
  EXPECT_TRUE(gf_equal_exact(a, b));
  EXPECT_TRUE(gf_equal_exact(a, c));
  EXPECT_FALSE(gf_equal_exact(a, k_function({2, 1})));
}

TEST(GfEqualExact, DistinctFunctions) {
  EXPECT_FALSE(gf_equal_exact(k_function({2, 1}), k_function({0, 1, 1, 0, 1}).scaled(Rational(1, 2))));
  EXPECT_FALSE(gf_equal_exact(k_function({2, 1}), k_function({1, 1, 1})));
  EXPECT_FALSE(gf_equal_exact(k_function({2, 1}), k_function({1, 1, 1, 1})));
}

TEST(GfEqualExact, AgreesWithFullCrossMultiplication) {
  // Independent check: expand both sides completely.
  auto a = k_function({1, 1, 1, 1}).multiplied(parse_factor("t4-2*t1-t2", 4));
  auto b = k_function({1, 1, 1, 1}).multiplied(parse_factor("t4-t1-2*t2", 4));
  auto cross = [](const RationalGF& x, const RationalGF& y) {
    LaurentPoly p = LaurentPoly::constant(x.nvars(), x.scalar()) * x.numerator();
    for (const auto& f : y.denominator()) p *= f.to_poly();
    return p;
  };
  EXPECT_EQ(gf_equal_exact(a, b), cross(a, b) == cross(b, a));
  EXPECT_EQ(gf_equal_exact(a, a), cross(a, a) == cross(a, a));
}

TEST(RationalGF, ZeroScalarIsZero) {
  auto gf = k_function({2, 1}).scaled(0);
  EXPECT_TRUE(gf.is_zero());
  EXPECT_TRUE(gf_equal_exact(gf, k_function({2, 1}).scaled(0)));
}
