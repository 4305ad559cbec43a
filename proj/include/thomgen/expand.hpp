#pragma once

// Iterated Laurent expansion of a RationalGF in the regime t1 << t2 << ... << t_mu,
// restricted to a finite box of exponent vectors.
//
// Variables are eliminated from t_mu down to t1. At the step for t_k every
// numerator factor whose highest variable is t_k is multiplied in and every
// denominator factor (t_k - u), u in t1..t_{k-1}, is expanded as
// sum_n u^n t_k^{-n-1}. Nothing processed later involves t_k, so its exponent is
// final after the step and out-of-box terms are dropped immediately. Division by
// (t_k - u) is computed slice by slice in the exponent of t_k, from the top:
//   R_e = Q_{e+1} + u * R_{e+1},
// which stops at the lowest exponent that can still reach the box.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "genfun.hpp"

namespace thomgen {

/// Set of exponent vectors of fixed total degree with a lower bound per coordinate.
/// The upper bound of each coordinate follows from the others' lower bounds.
class ExpansionBox {
 public:
  ExpansionBox(long degree, std::vector<long> lower) : degree_(degree), lower_(std::move(lower)) {}

  /// Box of monomials that survive t_k^i -> c_{ell+1+i}: every exponent >= -(ell+1).
  static ExpansionBox for_thom(std::size_t mu, int ell, long degree) {
    return ExpansionBox(degree, std::vector<long>(mu, -(static_cast<long>(ell) + 1)));
  }

  /// Box of monomials whose Delta symbol can straighten to a nonzero Schur function:
  /// the key (ell+1+i_j) - j must be >= -mu, so coordinate j admits i_j >= j - mu - ell - 1.
  static ExpansionBox for_schur(std::size_t mu, int ell, long degree) {
    std::vector<long> lower(mu);
    for (std::size_t j = 0; j < mu; ++j)
      lower[j] = static_cast<long>(j + 1) - static_cast<long>(mu) - ell - 1;
    return ExpansionBox(degree, std::move(lower));
  }

  std::size_t nvars() const { return lower_.size(); }
  long degree() const { return degree_; }
  long lower(std::size_t i) const { return lower_[i]; }
  long upper(std::size_t i) const { return degree_ - (lower_sum() - lower_[i]); }
  long lower_sum() const { return std::accumulate(lower_.begin(), lower_.end(), 0L); }
  bool empty() const { return lower_sum() > degree_; }

  bool contains(const ExponentVector& e) const {
    if (e.size() != lower_.size() || e.total_degree() != degree_) return false;
    for (std::size_t i = 0; i < lower_.size(); ++i)
      if (e[i] < lower_[i]) return false;
    return true;
  }

 private:
  long degree_;
  std::vector<long> lower_;
};

struct ExpandOptions {
  /// Permits ell in [-mu, -2]; by default ell >= -1 is required.
  bool allow_negative_ell = false;
};

namespace detail {

inline constexpr std::size_t kMaxVars = 16;
using Packed = std::array<std::int16_t, kMaxVars>;

struct PackedHash {
  std::size_t operator()(const Packed& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct KernelOverflow {};

// 64-bit coefficient that throws KernelOverflow instead of wrapping; the kernel
// runs on it first and falls back to Integer only when a coefficient outgrows it.
class CheckedInt {
 public:
  CheckedInt() = default;
  CheckedInt(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit CheckedInt(const Integer& z) {
    if (z > std::numeric_limits<long long>::max() || z < std::numeric_limits<long long>::min()) throw KernelOverflow{};
    v_ = static_cast<long long>(z);
  }

  CheckedInt& operator+=(const CheckedInt& o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw KernelOverflow{};
    return *this;
  }
  friend CheckedInt operator*(const CheckedInt& a, const CheckedInt& b) {
    CheckedInt r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw KernelOverflow{};
    return r;
  }
  friend bool operator==(const CheckedInt& a, long long b) { return a.v_ == b; }
  Integer to_integer() const { return Integer(v_); }

 private:
  long long v_ = 0;
};

inline Integer to_integer(const Integer& z) { return z; }
inline Integer to_integer(const CheckedInt& z) { return z.to_integer(); }
inline CheckedInt coefficient_from(const Integer& z, const CheckedInt*) { return CheckedInt(z); }
inline Integer coefficient_from(const Integer& z, const Integer*) { return z; }

/// Kernel output: the expansion is scale * sum(coefficient * t^exponents).
struct RawExpansion {
  std::size_t nvars = 0;
  Rational scale = 1;
  std::vector<std::pair<Packed, Integer>> terms;
};

inline Packed pack(const ExponentVector& e) {
  Packed p{};
  for (std::size_t i = 0; i < e.size(); ++i) p[i] = static_cast<std::int16_t>(e[i]);
  return p;
}

inline void check_expandable(const RationalGF& gf) {
  if (gf.nvars() > kMaxVars)
    throw std::invalid_argument("expansion supports at most " + std::to_string(kMaxVars) + " variables");
  for (const auto& f : gf.denominator()) {
    auto top = f.top_variable();
    if (!top || f[*top] != 1)
      throw std::invalid_argument("denominator factor " + f.str() +
                                  " must have coefficient +1 on its highest variable");
  }
}

// Numerator factors with integer coefficients and the rational scale that was cleared from them.
struct IntegerData {
  struct Factor {
    std::size_t top;
    std::vector<std::pair<int, std::vector<std::pair<Packed, Integer>>>> slices;  // exponent of t_top -> lower part
  };
  struct Denominator {
    std::size_t top;
    std::vector<std::pair<std::size_t, long>> u;  // factor is t_top - u
  };
  Rational scale;
  std::vector<Factor> factors;
  std::vector<Denominator> denominators;
};

inline IntegerData integerize(const RationalGF& gf, const ExpansionBox& box) {
  const std::size_t mu = gf.nvars();
  IntegerData data{gf.scalar(), {}, {}};
  long magnitude = static_cast<long>(gf.denominator().size());
  for (std::size_t i = 0; i < mu; ++i) magnitude += std::max(std::labs(box.lower(i)), std::labs(box.upper(i)));
  for (const auto& f : gf.numerator_factors()) {
    Integer common = 1;
    for (const auto& [e, c] : f.terms()) common = boost::multiprecision::lcm(common, denominator_of(c));
    long m = 0;
    for (const auto& [e, c] : f.terms())
      for (std::size_t i = 0; i < mu; ++i) m = std::max(m, static_cast<long>(std::abs(e[i])));
    magnitude += m;
    data.scale /= Rational(common);
    auto top = f.top_variable();
    if (!top) {
      data.scale *= *f.as_constant() * Rational(common);
      continue;
    }
    std::map<int, std::map<Packed, Integer>> by_top;
    for (const auto& [e, c] : f.terms()) {
      Packed lower = pack(e);
      lower[*top] = 0;
      by_top[e[*top]][lower] += numerator_of(c * Rational(common));
    }
    IntegerData::Factor factor{*top, {}};
    for (auto& [s, p] : by_top) {
      std::vector<std::pair<Packed, Integer>> terms;
      for (auto& [k, c] : p)
        if (c != 0) terms.emplace_back(k, c);
      factor.slices.emplace_back(s, std::move(terms));
    }
    data.factors.push_back(std::move(factor));
  }
  if (magnitude > 30000) throw std::invalid_argument("exponent range too large for the expansion engine");
  for (const auto& f : gf.denominator()) {
    IntegerData::Denominator d{*f.top_variable(), {}};
    for (std::size_t i = 0; i < d.top; ++i)
      if (f[i] != 0) d.u.emplace_back(i, -f[i]);
    data.denominators.push_back(std::move(d));
  }
  return data;
}

template <class C>
class Expander {
 public:
  using Poly = absl::flat_hash_map<Packed, C, PackedHash>;
  using Slices = std::map<int, Poly>;

  Expander(std::size_t mu, const ExpansionBox& box, const IntegerData& data) : mu_(mu), box_(box) {
    for (const auto& f : data.factors) {
      Factor g{f.top, {}};
      for (const auto& [s, terms] : f.slices) {
        std::vector<std::pair<Packed, C>> t;
        for (const auto& [k, c] : terms) t.emplace_back(k, coefficient_from(c, static_cast<const C*>(nullptr)));
        g.slices.emplace_back(s, std::move(t));
      }
      factors_.push_back(std::move(g));
    }
    for (const auto& d : data.denominators) {
      Denominator e{d.top, {}};
      for (const auto& [v, a] : d.u) e.u.emplace_back(v, C(static_cast<long long>(a)));
      denominators_.push_back(std::move(e));
    }
  }

  Poly run() const {
    Poly state;
    if (box_.empty()) return state;
    state.emplace(Packed{}, C(1LL));
    for (std::size_t v = mu_; v-- > 0;) {
      state = step(state, v);
      if (state.empty()) break;
    }
    return state;
  }

 private:
  struct Factor {
    std::size_t top;
    std::vector<std::pair<int, std::vector<std::pair<Packed, C>>>> slices;
  };
  struct Denominator {
    std::size_t top;
    std::vector<std::pair<std::size_t, C>> u;
  };

  static void accumulate(Poly& p, const Packed& e, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) p.erase(it);
    }
  }

  Poly step(const Poly& state, std::size_t v) const {
    // The box bounds for t_v depend on the higher variables only through the sum h of
    // their (final) exponents, and multiplication/division at this step does not touch
    // them. Terms are therefore grouped by h and sliced by the exponent of t_v; the
    // higher exponents ride along in the keys.
    std::map<long, Slices> groups;
    for (const auto& [k, c] : state) {
      long h = 0;
      for (std::size_t i = v + 1; i < mu_; ++i) h += k[i];
      Packed rest = k;
      rest[v] = 0;
      accumulate(groups[h][k[v]], rest, c);
    }

    long lower_min = 0, lower_max = 0;
    for (std::size_t i = 0; i < v; ++i) {
      lower_min += box_.lower(i);
      lower_max += box_.upper(i);
    }

    std::vector<const Factor*> mults;
    for (const auto& f : factors_)
      if (f.top == v) mults.push_back(&f);
    std::vector<const Denominator*> divs;
    for (const auto& d : denominators_)
      if (d.top == v) divs.push_back(&d);

    Poly next;
    for (auto& [h, slices] : groups) {
      const long lo = std::max(box_.lower(v), box_.degree() - h - lower_max);
      const long hi = std::min(box_.upper(v), box_.degree() - h - lower_min);
      if (lo > hi) continue;

      Slices current = std::move(slices);
      for (const auto* f : mults) current = multiply(current, *f);
      prune_below(current, lo + static_cast<long>(divs.size()));
      for (std::size_t j = 0; j < divs.size(); ++j)
        current = divide(current, *divs[j], lo + static_cast<long>(divs.size() - 1 - j));

      for (auto& [e, poly] : current) {
        if (e < lo || e > hi) continue;
        for (auto& [k, c] : poly) {
          Packed full = k;
          full[v] = static_cast<std::int16_t>(e);
          accumulate(next, full, c);
        }
      }
    }
    return next;
  }

  static void prune_below(Slices& s, long cutoff) {
    s.erase(s.begin(), s.lower_bound(static_cast<int>(std::max<long>(cutoff, INT32_MIN))));
  }

  static Slices multiply(const Slices& q, const Factor& f) {
    Slices out;
    for (const auto& [e, poly] : q)
      for (const auto& [s, fterms] : f.slices) {
        auto& dst = out[e + s];
        for (const auto& [k1, c1] : poly)
          for (const auto& [k2, c2] : fterms) {
            Packed k = k1;
            for (std::size_t i = 0; i < kMaxVars; ++i) k[i] = static_cast<std::int16_t>(k[i] + k2[i]);
            accumulate(dst, k, c1 * c2);
          }
      }
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
  }

  // Q / (t_v - u), keeping exponents of t_v >= cutoff.
  static Slices divide(const Slices& q, const Denominator& d, long cutoff) {
    Slices r;
    if (q.empty()) return r;
    const int top = q.rbegin()->first;
    const int bottom = q.begin()->first;
    const Poly empty;
    const Poly* carry = &empty;  // R_{e+1}
    for (long e = top - 1; e >= cutoff; --e) {
      Poly next;
      next.reserve(carry->size() * d.u.size() + 1);
      for (const auto& [k, c] : *carry)
        for (const auto& [var, a] : d.u) {
          Packed k2 = k;
          ++k2[var];
          accumulate(next, k2, c * a);
        }
      if (auto it = q.find(static_cast<int>(e + 1)); it != q.end())
        for (const auto& [k, c] : it->second) accumulate(next, k, c);
      if (next.empty()) {
        carry = &empty;
        if (e + 1 <= bottom) break;
        continue;
      }
      auto [it, ins] = r.emplace(static_cast<int>(e), std::move(next));
      carry = &it->second;
    }
    return r;
  }

  std::size_t mu_;
  ExpansionBox box_;
  std::vector<Factor> factors_;
  std::vector<Denominator> denominators_;
};

/// Runs the kernel on 64-bit coefficients, redoing the work with big integers on overflow.
inline RawExpansion expand_raw(const RationalGF& gf, const ExpansionBox& box) {
  check_expandable(gf);
  if (box.nvars() != gf.nvars()) throw std::invalid_argument("expansion box has the wrong number of variables");
  if (gf.homogeneous_degree() != box.degree())
    throw std::invalid_argument("expansion box degree differs from the generating function degree");
  RawExpansion out;
  out.nvars = gf.nvars();
  if (gf.is_zero()) {
    out.scale = 0;
    return out;
  }
  const IntegerData data = integerize(gf, box);
  out.scale = data.scale;
  try {
    auto state = Expander<CheckedInt>(gf.nvars(), box, data).run();
    out.terms.reserve(state.size());
    for (const auto& [k, c] : state) out.terms.emplace_back(k, c.to_integer());
  } catch (const KernelOverflow&) {
    out.terms.clear();
    auto state = Expander<Integer>(gf.nvars(), box, data).run();
    out.terms.reserve(state.size());
    for (auto& [k, c] : state) out.terms.emplace_back(k, std::move(c));
  }
  return out;
}

}  // namespace detail

inline void check_ell(std::size_t mu, int ell, const ExpandOptions& opts = {}) {
  if (ell < -static_cast<int>(mu))
    throw std::invalid_argument("relative dimension " + std::to_string(ell) + " is below -mu = -" +
                                std::to_string(mu));
  if (ell < -1 && !opts.allow_negative_ell)
    throw std::invalid_argument("relative dimension " + std::to_string(ell) +
                                " below -1 requires allow_negative_ell");
}

/// Terms of the full iterated Laurent expansion of gf that lie in the box.
inline LaurentPoly expand_in_box(const RationalGF& gf, const ExpansionBox& box) {
  const auto raw = detail::expand_raw(gf, box);
  LaurentPoly out(gf.nvars());
  for (const auto& [k, c] : raw.terms) {
    ExponentVector e(gf.nvars());
    for (std::size_t i = 0; i < gf.nvars(); ++i) e[i] = k[i];
    out.add_term(e, Rational(c) * raw.scale);
  }
  return out;
}

/// Terms of the expansion that can contribute to the Thom polynomial at relative dimension ell.
inline LaurentPoly expand(const RationalGF& gf, int ell, const ExpandOptions& opts = {}) {
  check_ell(gf.nvars(), ell, opts);
  detail::check_expandable(gf);
  return expand_in_box(gf, ExpansionBox::for_thom(gf.nvars(), ell, gf.homogeneous_degree()));
}

}  // namespace thomgen
