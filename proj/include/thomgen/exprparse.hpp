#pragma once

// Text input: dimension vectors ("0,1,1,0,1"), polynomial factors in t1..tN
// ("(t4-t1-t2)*(t4-t2-t3)*4", "1/2*t1^2*t3^-1") and linear forms.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*        division only by nonzero constants
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] integer)?      negative powers only of monomials
//   primary := integer | 't' integer | '(' expr ')'

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genfun.hpp"

namespace thomgen {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct ParseOptions {
  bool require_homogeneous = true;
};

namespace detail {

inline void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

class ExprParser {
 public:
  ExprParser(std::string_view src, std::size_t nvars) : src_(src), nvars_(nvars) {}

  /// Parses the whole input as a product of factors. A top-level sum is returned as one factor.
  std::vector<LaurentPoly> parse_product() {
    auto factors = term();
    skip();
    if (pos_ < src_.size() && (peek() == '+' || peek() == '-')) {
      LaurentPoly sum = multiply_out(factors);
      while (pos_ < src_.size() && (peek() == '+' || peek() == '-')) {
        char op = src_[pos_++];
        LaurentPoly rhs = multiply_out(term());
        sum = op == '+' ? sum + rhs : sum - rhs;
        skip();
      }
      factors = {sum};
    }
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return factors;
  }

 private:
  char peek() const { return src_[pos_]; }
  void skip() { skip_space(src_, pos_); }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  LaurentPoly multiply_out(const std::vector<LaurentPoly>& factors) const {
    LaurentPoly p = LaurentPoly::constant(nvars_, 1);
    for (const auto& f : factors) p *= f;
    return p;
  }

  LaurentPoly expr() {
    LaurentPoly sum = multiply_out(term());
    skip();
    while (pos_ < src_.size() && (peek() == '+' || peek() == '-')) {
      char op = src_[pos_++];
      LaurentPoly rhs = multiply_out(term());
      sum = op == '+' ? sum + rhs : sum - rhs;
      skip();
    }
    return sum;
  }

  // Factors of a product; the first entry collects constants.
  std::vector<LaurentPoly> term() {
    std::vector<LaurentPoly> factors{LaurentPoly::constant(nvars_, 1)};
    auto push = [&](LaurentPoly f) {
      if (auto c = f.as_constant())
        factors[0] *= *c;
      else
        factors.push_back(std::move(f));
    };
    push(unary());
    skip();
    while (pos_ < src_.size() && (peek() == '*' || peek() == '/')) {
      char op = src_[pos_++];
      skip();
      std::size_t at = pos_;
      LaurentPoly f = unary();
      if (op == '*') {
        push(std::move(f));
      } else {
        auto c = f.as_constant();
        if (!c) fail_at(at, "division by a non-constant");
        if (*c == 0) fail_at(at, "division by zero");
        factors[0] *= Rational(1) / *c;
      }
      skip();
    }
    if (factors.size() > 1 && factors[0].as_constant() == Rational(1)) factors.erase(factors.begin());
    return factors;
  }

  LaurentPoly unary() {
    skip();
    if (pos_ < src_.size() && (peek() == '-' || peek() == '+')) {
      char op = src_[pos_++];
      LaurentPoly v = unary();
      return op == '-' ? -v : v;
    }
    return power();
  }

  LaurentPoly power() {
    std::size_t at = pos_;
    LaurentPoly base = primary();
    skip();
    if (pos_ >= src_.size() || peek() != '^') return base;
    ++pos_;
    skip();
    bool negative = false;
    if (pos_ < src_.size() && peek() == '-') {
      negative = true;
      ++pos_;
      skip();
    }
    std::size_t exp_at = pos_;
    long n = integer("exponent");
    if (n > 10000) fail_at(exp_at, "exponent too large");
    if (!negative) return base.pow(static_cast<unsigned>(n));
    if (base.size() != 1) fail_at(at, "negative power of a non-monomial");
    const auto& [e, c] = *base.terms().begin();
    ExponentVector inv(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) inv[i] = -e[i];
    return LaurentPoly::monomial(inv, Rational(1) / c).pow(static_cast<unsigned>(n));
  }

  LaurentPoly primary() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      LaurentPoly v = expr();
      skip();
      if (pos_ >= src_.size() || peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t at = pos_;
      std::string digits;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(peek()))) digits += src_[pos_++];
      try {
        return LaurentPoly::constant(nvars_, Rational(Integer(digits)));
      } catch (const std::exception&) {
        fail_at(at, "bad number");
      }
    }
    if (ch == 't') {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail_at(at, "expected variable index after 't'");
      long idx = integer("variable index");
      if (idx < 1 || static_cast<std::size_t>(idx) > nvars_)
        fail_at(at, "unknown variable t" + std::to_string(idx) + " (variables are t1..t" + std::to_string(nvars_) + ")");
      return LaurentPoly::variable(nvars_, static_cast<std::size_t>(idx - 1));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  long integer(const char* what) {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail_at(start, std::string(what) + " out of range");
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return v;
  }

  std::string_view src_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Comma-separated non-negative integers, optionally wrapped in parentheses.
inline DimensionVector parse_dimvec(std::string_view s) {
  std::size_t pos = 0;
  detail::skip_space(s, pos);
  bool paren = pos < s.size() && s[pos] == '(';
  if (paren) ++pos;
  std::vector<int> out;
  while (true) {
    detail::skip_space(s, pos);
    if (pos >= s.size()) throw ParseError(pos, out.empty() ? "empty dimension vector" : "expected an entry");
    if (s[pos] == '-') throw ParseError(pos, "negative dimension vector entry");
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError(pos, "expected a non-negative integer, found '" + std::string(1, s[pos]) + "'");
    std::size_t start = pos;
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000) throw ParseError(start, "dimension vector entry too large");
    }
    out.push_back(static_cast<int>(v));
    detail::skip_space(s, pos);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (paren) {
    if (pos >= s.size() || s[pos] != ')') throw ParseError(pos, "expected ')'");
    ++pos;
    detail::skip_space(s, pos);
  }
  if (pos != s.size()) throw ParseError(pos, "unexpected '" + std::string(1, s[pos]) + "'");
  try {
    return DimensionVector(std::move(out));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

/// Parses s as a product and returns its factors unexpanded, with the constant part
/// (if not 1) as the first factor. "4*(t4-t1)*(t4-t2)" gives {4, t4-t1, t4-t2}.
inline std::vector<LaurentPoly> parse_factor_list(std::string_view s, std::size_t nvars, const ParseOptions& opts = {}) {
  auto factors = detail::ExprParser(s, nvars).parse_product();
  if (opts.require_homogeneous)
    for (const auto& f : factors)
      if (!f.is_homogeneous()) throw ParseError(0, "factor is not homogeneous: " + f.str());
  return factors;
}

inline LaurentPoly parse_factor(std::string_view s, std::size_t nvars, const ParseOptions& opts = {}) {
  LaurentPoly p = LaurentPoly::constant(nvars, 1);
  for (const auto& f : detail::ExprParser(s, nvars).parse_product()) p *= f;
  if (opts.require_homogeneous && !p.is_homogeneous()) throw ParseError(0, "expression is not homogeneous: " + p.str());
  return p;
}

/// Integer linear form such as "t3-2*t1".
inline LinForm parse_linform(std::string_view s, std::size_t nvars) {
  auto f = LinForm::from_poly(parse_factor(s, nvars, {.require_homogeneous = false}));
  if (!f || f->is_zero()) throw ParseError(0, "not a nonzero integer linear form");
  return *f;
}

/// Signed rational literal "p" or "p/q".
inline Rational parse_scalar(std::string_view s) {
  try {
    return parse_rational(std::string(s));
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "bad rational number '" + std::string(s) + "'");
  }
}

}  // namespace thomgen
