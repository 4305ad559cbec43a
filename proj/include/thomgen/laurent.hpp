#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients,
// and integer linear forms in the same variables.
//
// Variables are indexed from 0 in the API and displayed as t1, t2, ...

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace thomgen {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0) {}
  ExponentVector(std::initializer_list<int> e) : e_(e) {}
  explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }

  long total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

  ExponentVector operator+(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  ExponentVector operator-(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> e_;
};

/// Graded lexicographic order, greatest first.
struct GrlexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.entries() > b.entries();
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrlexDescending>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Rational& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(ExponentVector(nvars), c);
    return p;
  }
  static LaurentPoly monomial(const ExponentVector& e, const Rational& c = 1) {
    LaurentPoly p(e.size());
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }
  static LaurentPoly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    ExponentVector e(nvars);
    e[index] = 1;
    return monomial(e);
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * t^e in place, keeping the canonical form.
  void add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent vector length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Total degree of every term, or nullopt if the polynomial is not homogeneous.
  /// The zero polynomial is reported as homogeneous of degree 0.
  std::optional<long> homogeneous_degree() const {
    if (terms_.empty()) return 0L;
    long d = terms_.begin()->first.total_degree();
    for (const auto& [e, c] : terms_)
      if (e.total_degree() != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }

  /// Largest variable index occurring with a nonzero exponent, or nullopt for constants.
  std::optional<std::size_t> top_variable() const {
    std::optional<std::size_t> top;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = nvars_; i-- > 0;)
        if (e[i] != 0) {
          if (!top || i > *top) top = i;
          break;
        }
    return top;
  }

  std::optional<Rational> as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == ExponentVector(nvars_)) return terms_.begin()->second;
    return std::nullopt;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    std::map<ExponentVector, Rational> acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    LaurentPoly r(a.nvars_);
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace_hint(r.terms_.end(), e, std::move(c));
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly r = constant(nvars_, 1), base = *this;
    while (n) {
      if (n & 1u) r *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return r;
  }

  /// Exact division by a monomial (always possible for Laurent polynomials).
  LaurentPoly shifted(const ExponentVector& e) const {
    LaurentPoly r(nvars_);
    for (const auto& [ee, c] : terms_) r.terms_.emplace(ee + e, c);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Rebuilds the term map from scratch; a no-op on values built through the public API.
  LaurentPoly normalized() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  /// Text form accepted by the expression parser, e.g. "t1*t2*t3^-1 - 1/2*t1^2".
  std::string str() const;

 private:
  void check_compatible(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_)
      throw std::invalid_argument("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                                  std::to_string(o.nvars_));
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline std::string monomial_string(const ExponentVector& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 't' + std::to_string(i + 1);
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

inline std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono = monomial_string(e);
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

/// Integer linear form a_1 t1 + ... + a_n tn.
class LinForm {
 public:
  LinForm() = default;
  explicit LinForm(std::vector<long> coeffs) : c_(std::move(coeffs)) {}
  LinForm(std::initializer_list<long> coeffs) : c_(coeffs) {}

  /// t_top - sum of the given variables (with repetition), e.g. top_minus(3, 2, {0, 1}) = t3 - t1 - t2.
  static LinForm top_minus(std::size_t nvars, std::size_t top, std::initializer_list<std::size_t> minus) {
    std::vector<long> c(nvars, 0);
    c.at(top) += 1;
    for (auto i : minus) c.at(i) -= 1;
    return LinForm(std::move(c));
  }

  std::size_t nvars() const { return c_.size(); }
  long operator[](std::size_t i) const { return c_[i]; }
  const std::vector<long>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long a) { return a == 0; });
  }

  std::optional<std::size_t> top_variable() const {
    for (std::size_t i = c_.size(); i-- > 0;)
      if (c_[i] != 0) return i;
    return std::nullopt;
  }

  LaurentPoly to_poly() const {
    LaurentPoly p(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) p.add_term(unit(i), Rational(c_[i]));
    return p;
  }

  /// Recovers a linear form from a polynomial whose terms are all degree-1 unit monomials.
  static std::optional<LinForm> from_poly(const LaurentPoly& p) {
    std::vector<long> c(p.nvars(), 0);
    for (const auto& [e, q] : p.terms()) {
      if (!is_integral(q)) return std::nullopt;
      std::optional<std::size_t> var;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] != 1 || var) return std::nullopt;
        var = i;
      }
      if (!var) return std::nullopt;
      c[*var] = static_cast<long>(numerator_of(q));
    }
    return LinForm(std::move(c));
  }

  /// Highest variable first, then the rest in index order: "t4 - 2*t1 - t2".
  std::string str() const {
    std::vector<std::size_t> order;
    if (auto top = top_variable()) order.push_back(*top);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (order.empty() || i != order.front()) order.push_back(i);
    std::string s;
    for (std::size_t i : order) {
      const long c = c_[i];
      if (c == 0) continue;
      const long mag = c < 0 ? -c : c;
      s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (mag != 1) s += std::to_string(mag) + "*";
      s += "t" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const LinForm&, const LinForm&) = default;
  friend auto operator<=>(const LinForm&, const LinForm&) = default;

 private:
  ExponentVector unit(std::size_t i) const {
    ExponentVector e(c_.size());
    e[i] = 1;
    return e;
  }

  std::vector<long> c_;
};

namespace detail {

// Splits p by the exponent of variable v: p = sum_s t_v^s * slices[s].
inline std::map<int, LaurentPoly> slice_by_variable(const LaurentPoly& p, std::size_t v) {
  std::map<int, LaurentPoly> slices;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector rest = e;
    rest[v] = 0;
    auto [it, ins] = slices.try_emplace(e[v], p.nvars());
    it->second.add_term(rest, c);
  }
  return slices;
}

}  // namespace detail

/// Exact quotient p / f, or nullopt when f does not divide p in the Laurent ring.
inline std::optional<LaurentPoly> try_divide_linear(const LaurentPoly& p, const LinForm& f) {
  if (f.nvars() != p.nvars()) throw std::invalid_argument("variable count mismatch in division");
  auto top = f.top_variable();
  if (!top) throw std::invalid_argument("division by the zero linear form");
  if (p.is_zero()) return LaurentPoly(p.nvars());

  const std::size_t v = *top;
  const Rational lead(f[v]);
  // f = lead * t_v + g with g free of t_v
  std::vector<long> rest = f.coeffs();
  rest[v] = 0;
  const LaurentPoly g = LinForm(rest).to_poly();
  if (g.is_zero()) {
    // f is a unit times a monomial
    ExponentVector shift(p.nvars());
    shift[v] = -1;
    return p.shifted(shift) * (Rational(1) / lead);
  }

  auto slices = detail::slice_by_variable(p, v);
  const int smax = slices.rbegin()->first;
  const int smin = slices.begin()->first;

  // p_s = lead * q_{s-1} + g * q_s, solved from the top slice downwards.
  LaurentPoly quotient(p.nvars());
  LaurentPoly q_above(p.nvars());  // q_s for the current s
  for (int s = smax; s >= smin; --s) {
    LaurentPoly ps = slices.count(s) ? slices.at(s) : LaurentPoly(p.nvars());
    LaurentPoly residual = ps - g * q_above;
    if (s == smin) {
      if (!residual.is_zero()) return std::nullopt;
      break;
    }
    LaurentPoly q_below = residual * (Rational(1) / lead);
    ExponentVector shift(p.nvars());
    shift[v] = s - 1;
    quotient += q_below.shifted(shift);
    q_above = std::move(q_below);
  }
  return quotient;
}

}  // namespace thomgen
