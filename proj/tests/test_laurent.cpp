#include <random>

#include <gtest/gtest.h>

#include <thomgen/exprparse.hpp>
#include <thomgen/laurent.hpp>

using namespace thomgen;

namespace {

LaurentPoly random_poly(std::mt19937& rng, std::size_t nv) {
  std::uniform_int_distribution<int> exp(-2, 2), coef(-3, 3), count(0, 4), den(1, 3);
  LaurentPoly p(nv);
  for (int n = count(rng); n > 0; --n) {
    ExponentVector e(nv);
    for (std::size_t i = 0; i < nv; ++i) e[i] = exp(rng);
    p.add_term(e, Rational(coef(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST(Laurent, ZeroCoefficientsAreNeverStored) {
  LaurentPoly p(2);
  p.add_term({1, 0}, 3);
  p.add_term({1, 0}, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
  EXPECT_EQ(p.str(), "0");
}

TEST(Laurent, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nv = 1 + trial % 3;
    auto a = random_poly(rng, nv), b = random_poly(rng, nv), c = random_poly(rng, nv);
    const auto zero = LaurentPoly(nv), one = LaurentPoly::constant(nv, 1);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Laurent, StrRoundTripsThroughTheParser) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nv = 1 + trial % 4;
    auto p = random_poly(rng, nv);
    EXPECT_EQ(parse_factor(p.str(), nv, {.require_homogeneous = false}), p) << p.str();
  }
}

TEST(Laurent, StrFormat) {
  LaurentPoly p(3);
  p.add_term({1, 1, -1}, 1);
  p.add_term({2, 0, -1}, Rational(-1, 2));
  EXPECT_EQ(p.str(), "-1/2*t1^2*t3^-1 + t1*t2*t3^-1");
}

TEST(Laurent, HomogeneousDegree) {
  auto p = parse_factor("t1*t2*t3^-1 - t1^2*t3^-1", 3, {.require_homogeneous = false});
  EXPECT_EQ(p.homogeneous_degree(), 1);
  auto q = parse_factor("t1 + 1", 3, {.require_homogeneous = false});
  EXPECT_FALSE(q.homogeneous_degree().has_value());
}

TEST(Laurent, DivisionByLinearForm) {
  const LinForm f{-1, -1, 1};  // t3 - t1 - t2
  auto g = parse_factor("t1^2 - 3*t2*t3 + t3^2", 3);
  auto q = try_divide_linear(f.to_poly() * g, f);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, g);
  EXPECT_FALSE(try_divide_linear(g, f).has_value());
  // Division by a monomial form is a shift.
  auto m = try_divide_linear(parse_factor("t2", 3), LinForm{0, 2, 0});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, LaurentPoly::constant(3, Rational(1, 2)));
}

TEST(Laurent, DivisionRecognizesVanishingOnTheHyperplane) {
  // (t4-2t1-t2)(t4-t1-2t2) - (t4-t2-t3)(t4-t1-t3) vanishes on t3 = t1 + t2.
  auto p = parse_factor("(t4-2*t1-t2)*(t4-t1-2*t2)-(t4-t2-t3)*(t4-t1-t3)", 4);
  EXPECT_TRUE(try_divide_linear(p, LinForm{-1, -1, 1, 0}).has_value());
  EXPECT_FALSE(try_divide_linear(p, LinForm{-2, 0, 0, 1}).has_value());
}

TEST(Laurent, LinFormBasics) {
  auto f = LinForm::top_minus(4, 3, {0, 0, 1});
  EXPECT_EQ(f.str(), "t4 - 2*t1 - t2");
  EXPECT_EQ(f.top_variable(), 3u);
  EXPECT_EQ(LinForm::from_poly(f.to_poly()), f);
  EXPECT_FALSE(LinForm::from_poly(parse_factor("t1*t2", 2)).has_value());
  EXPECT_TRUE(LinForm({0, 0}).is_zero());
}

TEST(Laurent, MismatchedVariableCountsThrow) {
  EXPECT_THROW(LaurentPoly::variable(2, 0) + LaurentPoly::variable(3, 0), std::invalid_argument);
}
