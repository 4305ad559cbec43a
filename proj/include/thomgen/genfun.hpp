#pragma once

// Rational generating functions K_d and K~_d attached to a dimension vector,
// together with extra numerator factors, scalar multipliers, cancellation of
// linear factors and exact comparison.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace thomgen {

class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<int> entries) : d_(std::move(entries)) { validate(); }
  DimensionVector(std::initializer_list<int> entries) : d_(entries) { validate(); }

  const std::vector<int>& entries() const { return d_; }
  std::size_t length() const { return d_.size(); }
  int mu() const { return std::accumulate(d_.begin(), d_.end(), 0); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < d_.size(); ++i) s += (i ? "," : "") + std::to_string(d_[i]);
    return s;
  }

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

 private:
  void validate() const {
    for (int x : d_)
      if (x < 0) throw std::invalid_argument("dimension vector entries must be non-negative");
    if (mu() < 1) throw std::invalid_argument("dimension vector must have positive total dimension");
  }

  std::vector<int> d_;
};

struct WeightProfile {
  std::vector<int> weights;    // w(1..mu), non-decreasing
  std::vector<int> exponents;  // e(1..mu), counting down to 0 inside each block
};

inline WeightProfile weight_profile(const DimensionVector& d) {
  WeightProfile wp;
  const auto& dv = d.entries();
  for (std::size_t k = 0; k < dv.size(); ++k)
    for (int j = dv[k] - 1; j >= 0; --j) {
      wp.weights.push_back(static_cast<int>(k) + 1);
      wp.exponents.push_back(j);
    }
  return wp;
}

/// scalar * (product of numerator factors) / (product of linear denominator factors).
///
/// The numerator is kept as a list of homogeneous factors; `numerator()` expands it.
/// Keeping it factored makes cancellation and exact comparison cheap and lets the
/// expansion engine bring in each factor only when its top variable is reached.
class RationalGF {
 public:
  explicit RationalGF(std::size_t nvars) : nvars_(nvars) {}

  RationalGF(std::size_t nvars, Rational scalar, std::vector<LaurentPoly> numerator_factors,
             std::vector<LinForm> denominator)
      : nvars_(nvars), scalar_(std::move(scalar)) {
    for (auto& f : numerator_factors) append_numerator_factor(std::move(f));
    for (auto& f : denominator) append_denominator_factor(std::move(f));
  }

  std::size_t nvars() const { return nvars_; }
  const Rational& scalar() const { return scalar_; }
  const std::vector<LaurentPoly>& numerator_factors() const { return num_; }
  const std::vector<LinForm>& denominator() const { return den_; }

  LaurentPoly numerator() const {
    LaurentPoly p = LaurentPoly::constant(nvars_, 1);
    for (const auto& f : num_) p *= f;
    return p;
  }

  long numerator_degree() const {
    long deg = 0;
    for (const auto& f : num_) deg += *f.homogeneous_degree();
    return deg;
  }

  long homogeneous_degree() const { return numerator_degree() - static_cast<long>(den_.size()); }

  bool is_zero() const {
    return scalar_ == 0 || std::any_of(num_.begin(), num_.end(), [](const auto& f) { return f.is_zero(); });
  }

  /// Multiplies the numerator by p and the scalar by s.
  RationalGF multiplied(const LaurentPoly& p, const Rational& s = 1) const {
    RationalGF r(*this);
    r.scalar_ *= s;
    r.append_numerator_factor(p);
    return r;
  }

  RationalGF scaled(const Rational& s) const {
    RationalGF r(*this);
    r.scalar_ *= s;
    return r;
  }

  RationalGF divided_by(const LinForm& f) const {
    RationalGF r(*this);
    r.append_denominator_factor(f);
    return r;
  }

  /// Human-readable form, e.g. "1/2 * (t2 - t1) * (t3 - t1) / ((t3 - 2*t1)*(t3 - t1 - t2))".
  std::string str() const {
    std::string s = to_string(scalar_);
    for (const auto& f : num_) s += " * (" + f.str() + ")";
    if (!den_.empty()) {
      s += " / (";
      for (std::size_t i = 0; i < den_.size(); ++i) s += (i ? "*(" : "(") + den_[i].str() + ")";
      s += ")";
    }
    return s;
  }

 private:
  friend RationalGF reduce(const RationalGF& gf);

  void append_numerator_factor(LaurentPoly f) {
    if (f.nvars() != nvars_) throw std::invalid_argument("factor variable count does not match generating function");
    if (!f.is_homogeneous()) throw std::invalid_argument("numerator factor is not homogeneous: " + f.str());
    if (auto c = f.as_constant()) {
      scalar_ *= *c;
      return;
    }
    num_.push_back(std::move(f));
  }

  void append_denominator_factor(LinForm f) {
    if (f.nvars() != nvars_) throw std::invalid_argument("denominator variable count does not match generating function");
    if (f.is_zero()) throw std::invalid_argument("zero linear form in denominator");
    den_.push_back(std::move(f));
  }

  std::size_t nvars_;
  Rational scalar_ = 1;
  std::vector<LaurentPoly> num_;
  std::vector<LinForm> den_;
};

/// Denominator factors t_k - t_i - t_j over 1 <= i <= j < k <= mu with w(i) + w(j) <= w(k),
/// in (k, i, j) order.
inline std::vector<LinForm> k_denominator(const DimensionVector& d) {
  const auto wp = weight_profile(d);
  const std::size_t mu = wp.weights.size();
  std::vector<LinForm> den;
  for (std::size_t k = 0; k < mu; ++k)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j)
        if (wp.weights[i] + wp.weights[j] <= wp.weights[k]) den.push_back(LinForm::top_minus(mu, k, {i, j}));
  return den;
}

inline LaurentPoly vandermonde_factor(std::size_t mu, std::size_t i, std::size_t j) {
  return LaurentPoly::variable(mu, j) - LaurentPoly::variable(mu, i);
}

/// K_d: prod t_i^{e(i)} * prod_{i<j} (t_j - t_i) / prod (t_k - t_i - t_j).
inline RationalGF k_function(const DimensionVector& d) {
  const auto wp = weight_profile(d);
  const std::size_t mu = wp.weights.size();
  std::vector<LaurentPoly> num;
  num.push_back(LaurentPoly::monomial(ExponentVector(wp.exponents)));
  for (std::size_t j = 0; j < mu; ++j)
    for (std::size_t i = 0; i < j; ++i) num.push_back(vandermonde_factor(mu, i, j));
  return RationalGF(mu, 1, std::move(num), k_denominator(d));
}

/// K~_d: prod t_i^{e(i)+i-1} / prod (t_k - t_i - t_j), the Schur-basis generating function.
inline RationalGF ktilde_function(const DimensionVector& d) {
  const auto wp = weight_profile(d);
  const std::size_t mu = wp.weights.size();
  ExponentVector e(mu);
  for (std::size_t i = 0; i < mu; ++i) e[i] = wp.exponents[i] + static_cast<int>(i);
  return RationalGF(mu, 1, {LaurentPoly::monomial(e)}, k_denominator(d));
}

inline RationalGF multiply_factor(const RationalGF& gf, const LaurentPoly& p, const Rational& s = 1) {
  return gf.multiplied(p, s);
}

inline long homogeneous_degree(const RationalGF& gf) { return gf.homogeneous_degree(); }

/// Cancels denominator factors that exactly divide the numerator.
///
/// A linear form is irreducible, so it divides the numerator iff it divides one of
/// its factors; checking factor by factor is therefore the same as dividing the
/// expanded numerator.
inline RationalGF reduce(const RationalGF& gf) {
  RationalGF r(gf);
  if (r.is_zero()) return RationalGF(gf.nvars(), 0, {}, {});
  std::vector<LinForm> kept;
  for (const auto& f : gf.den_) {
    bool cancelled = false;
    for (std::size_t n = 0; n < r.num_.size() && !cancelled; ++n) {
      if (auto q = try_divide_linear(r.num_[n], f)) {
        if (auto c = q->as_constant()) {
          r.scalar_ *= *c;
          r.num_.erase(r.num_.begin() + static_cast<std::ptrdiff_t>(n));
        } else {
          r.num_[n] = std::move(*q);
        }
        cancelled = true;
      }
    }
    if (!cancelled) kept.push_back(f);
  }
  r.den_ = std::move(kept);
  return r;
}

namespace detail {

// Scales p so that its leading (grlex-greatest) coefficient is 1 and returns the factor removed.
inline std::pair<LaurentPoly, Rational> make_monic(const LaurentPoly& p) {
  Rational lead = p.terms().begin()->second;
  return {p * (Rational(1) / lead), lead};
}

}  // namespace detail

/// True iff a and b are the same rational function.
///
/// Cross-multiplies: a.s * num(a) * den(b) == b.s * num(b) * den(a), after cancelling
/// factors common to both sides so that only the differing part is expanded.
inline bool gf_equal_exact(const RationalGF& a, const RationalGF& b) {
  if (a.nvars() != b.nvars()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();

  Rational lhs_scalar = a.scalar(), rhs_scalar = b.scalar();
  std::vector<LaurentPoly> lhs, rhs;
  auto push = [](std::vector<LaurentPoly>& side, Rational& scalar, const LaurentPoly& f) {
    auto [monic, lead] = detail::make_monic(f);
    scalar *= lead;
    side.push_back(std::move(monic));
  };
  for (const auto& f : a.numerator_factors()) push(lhs, lhs_scalar, f);
  for (const auto& f : b.denominator()) push(lhs, lhs_scalar, f.to_poly());
  for (const auto& f : b.numerator_factors()) push(rhs, rhs_scalar, f);
  for (const auto& f : a.denominator()) push(rhs, rhs_scalar, f.to_poly());

  std::vector<LaurentPoly> lhs_rest;
  for (auto& f : lhs) {
    auto it = std::find(rhs.begin(), rhs.end(), f);
    if (it != rhs.end())
      rhs.erase(it);
    else
      lhs_rest.push_back(std::move(f));
  }

  LaurentPoly left = LaurentPoly::constant(a.nvars(), lhs_scalar);
  for (const auto& f : lhs_rest) left *= f;
  LaurentPoly right = LaurentPoly::constant(a.nvars(), rhs_scalar);
  for (const auto& f : rhs) right *= f;
  return left == right;
}

}  // namespace thomgen
