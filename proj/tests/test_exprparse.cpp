#include <gtest/gtest.h>

#include <thomgen/exprparse.hpp>

using namespace thomgen;

namespace {

std::size_t error_offset(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "expected ParseError";
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(ParseDimvec, Forms) {
  EXPECT_EQ(parse_dimvec("0,1,1,0,1").entries(), (std::vector<int>{0, 1, 1, 0, 1}));
  EXPECT_EQ(parse_dimvec("(2, 1)").entries(), (std::vector<int>{2, 1}));
  EXPECT_EQ(parse_dimvec(" 3 ").entries(), (std::vector<int>{3}));
}

TEST(ParseDimvec, ErrorsCarryOffsets) {
  EXPECT_EQ(error_offset([] { parse_dimvec(""); }), 0u);
  EXPECT_EQ(error_offset([] { parse_dimvec("1,-2"); }), 2u);
  EXPECT_EQ(error_offset([] { parse_dimvec("1,x"); }), 2u);
  EXPECT_EQ(error_offset([] { parse_dimvec("1,2,"); }), 4u);
  EXPECT_EQ(error_offset([] { parse_dimvec("(1,2"); }), 4u);
  EXPECT_THROW(parse_dimvec("0,0"), ParseError);
}

TEST(ParseFactor, Arithmetic) {
  auto p = parse_factor("(t4-t1)*(t4-t2)*4", 4);
  auto t = [](std::size_t i) { return LaurentPoly::variable(4, i); };
  EXPECT_EQ(p, (t(3) - t(0)) * (t(3) - t(1)) * Rational(4));
  EXPECT_EQ(parse_factor("t1^2 - 2*t1*t2 + t2^2", 2), parse_factor("(t1-t2)^2", 2));
  EXPECT_EQ(parse_factor("1/2*t1^2*t3^-1", 3, {.require_homogeneous = false}).str(), "1/2*t1^2*t3^-1");
  EXPECT_EQ(parse_factor("-t1", 1), -LaurentPoly::variable(1, 0));
  EXPECT_EQ(parse_factor("t2/4", 2), LaurentPoly::variable(2, 1) * Rational(1, 4));
}

TEST(ParseFactor, Errors) {
  EXPECT_EQ(error_offset([] { parse_factor("t1 + t5", 3); }), 5u);
  EXPECT_EQ(error_offset([] { parse_factor("t1 / t2", 3); }), 5u);
  EXPECT_EQ(error_offset([] { parse_factor("(t1 + t2", 3); }), 8u);
  EXPECT_EQ(error_offset([] { parse_factor("(t1+t2)^-1", 3); }), 0u);
  EXPECT_EQ(error_offset([] { parse_factor("t1 $", 3); }), 3u);
  EXPECT_THROW(parse_factor("t1/0", 3), ParseError);
  EXPECT_THROW(parse_factor("t1 + t2^2", 3), ParseError);  // not homogeneous
  EXPECT_THROW(parse_factor("", 3), ParseError);
}

TEST(ParseFactorList, KeepsFactorsApart) {
  auto f = parse_factor_list("4*(t4-2*t1)*(t4-t2)", 4);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], LaurentPoly::constant(4, 4));
  EXPECT_EQ(f[1].str(), "-2*t1 + t4");
  auto single = parse_factor_list("t3-t1-t2", 3);
  EXPECT_EQ(single.size(), 1u);
  // A top-level sum of products is one factor.
  EXPECT_EQ(parse_factor_list("(t1)*(t2)-(t3)*(t1)", 3).size(), 1u);
}

TEST(ParseLinform, Valid) {
  EXPECT_EQ(parse_linform("t3-2*t1", 3), (LinForm{-2, 0, 1}));
  EXPECT_THROW(parse_linform("t1*t2", 3), ParseError);
  EXPECT_THROW(parse_linform("t1-t1", 3), ParseError);
  EXPECT_THROW(parse_linform("1/2*t1", 3), ParseError);
}

TEST(ParseScalar, Forms) {
  EXPECT_EQ(parse_scalar("-1/4"), Rational(-1, 4));
  EXPECT_EQ(parse_scalar("3"), Rational(3));
  EXPECT_EQ(parse_scalar("2/4"), Rational(1, 2));
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("x"), ParseError);
}
