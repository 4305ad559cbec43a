#pragma once

// Thom polynomials in the quotient Chern classes c_1, c_2, ... at a fixed
// relative dimension ell: each expansion monomial t1^i1...t_mu^i_mu becomes
// c_{ell+1+i1}...c_{ell+1+i_mu}, with c_0 = 1 and c_j = 0 for j < 0.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "expand.hpp"

namespace thomgen {

/// Product of Chern classes, stored as positive indices in non-increasing order.
using ChernMonomial = std::vector<int>;

class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChernPolynomial {
 public:
  /// Largest index first, then lexicographically on the remaining indices.
  struct Order {
    bool operator()(const ChernMonomial& a, const ChernMonomial& b) const { return a > b; }
  };
  using TermMap = std::map<ChernMonomial, Integer, Order>;

  ChernPolynomial(int ell, int mu, long codim) : ell_(ell), mu_(mu), codim_(codim) {}

  int ell() const { return ell_; }
  int mu() const { return mu_; }
  long codim() const { return codim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of prod c_{m}; c_0 factors are ignored and negative indices give 0.
  Integer coefficient(ChernMonomial m) const {
    if (std::any_of(m.begin(), m.end(), [](int i) { return i < 0; })) return 0;
    std::erase(m, 0);
    std::sort(m.begin(), m.end(), std::greater<>());
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Adds c * prod c_{indices}; zero indices are dropped, a negative index kills the term.
  void add_term(ChernMonomial indices, const Integer& c) {
    if (c == 0) return;
    if (std::any_of(indices.begin(), indices.end(), [](int i) { return i < 0; })) return;
    std::erase(indices, 0);
    std::sort(indices.begin(), indices.end(), std::greater<>());
    long sum = 0;
    for (int i : indices) sum += i;
    if (sum != codim_)
      throw std::logic_error("Chern monomial of degree " + std::to_string(sum) + " in polynomial of codimension " +
                             std::to_string(codim_));
    if (static_cast<int>(indices.size()) > mu_) throw std::logic_error("Chern monomial has more than mu factors");
    auto [it, inserted] = terms_.try_emplace(std::move(indices), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Polynomials are compared by value at a fixed ell; mu is metadata.
  friend bool operator==(const ChernPolynomial& a, const ChernPolynomial& b) {
    return a.ell_ == b.ell_ && a.codim_ == b.codim_ && a.terms_ == b.terms_;
  }

 private:
  int ell_;
  int mu_;
  long codim_;
  TermMap terms_;
};

/// Chern index of the monomial exponent i at relative dimension ell.
inline int chern_index(int ell, int exponent) { return ell + 1 + exponent; }

inline ChernPolynomial thom_polynomial(const RationalGF& gf, int ell, const ExpandOptions& opts = {}) {
  check_ell(gf.nvars(), ell, opts);
  detail::check_expandable(gf);
  const std::size_t mu = gf.nvars();
  const long d = gf.homogeneous_degree();
  const auto raw = detail::expand_raw(gf, ExpansionBox::for_thom(mu, ell, d));

  // Chern indices sorted decreasingly, zeros (c_0 = 1) at the end.
  absl::flat_hash_map<detail::Packed, Integer, detail::PackedHash> acc;
  for (const auto& [k, c] : raw.terms) {
    detail::Packed m{};
    for (std::size_t i = 0; i < mu; ++i) m[i] = static_cast<std::int16_t>(chern_index(ell, k[i]));
    std::sort(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(mu), std::greater<>());
    acc[m] += c;
  }

  ChernPolynomial tp(ell, static_cast<int>(mu), static_cast<long>(ell + 1) * static_cast<long>(mu) + d);
  for (const auto& [m, c] : acc) {
    if (c == 0) continue;
    ChernMonomial mono;
    for (std::size_t i = 0; i < mu && m[i] > 0; ++i) mono.push_back(m[i]);
    const Rational value = Rational(c) * raw.scale;
    if (!is_integral(value)) {
      std::string term;
      for (int i : mono) term += (term.empty() ? "c" : " c") + std::to_string(i);
      throw IntegralityError("non-integral coefficient " + to_string(value) + " at " + (term.empty() ? "1" : term) +
                             " (ell = " + std::to_string(ell) + ")");
    }
    tp.add_term(std::move(mono), numerator_of(value));
  }
  return tp;
}

/// Degree-k parts of prod(1 + targets) / prod(1 + sources), k = 0..degree_cap,
/// as polynomials in the root variables.
inline std::vector<LaurentPoly> quotient_chern_classes(const std::vector<LinForm>& targets,
                                                       const std::vector<LinForm>& sources, int degree_cap) {
  std::size_t nroots = 0;
  for (const auto& f : targets) nroots = std::max(nroots, f.nvars());
  for (const auto& f : sources) nroots = std::max(nroots, f.nvars());
  for (const auto& f : targets)
    if (f.nvars() != nroots) throw std::invalid_argument("root linear forms must share one variable count");
  for (const auto& f : sources)
    if (f.nvars() != nroots) throw std::invalid_argument("root linear forms must share one variable count");

  const std::size_t n = static_cast<std::size_t>(degree_cap) + 1;
  std::vector<LaurentPoly> total(n, LaurentPoly(nroots));
  total[0] = LaurentPoly::constant(nroots, 1);
  auto mul_graded = [&](const std::vector<LaurentPoly>& series) {
    std::vector<LaurentPoly> out(n, LaurentPoly(nroots));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; a + b < n; ++b)
        if (!total[a].is_zero() && !series[b].is_zero()) out[a + b] += total[a] * series[b];
    total = std::move(out);
  };
  for (const auto& beta : targets) {
    std::vector<LaurentPoly> s(n, LaurentPoly(nroots));
    s[0] = LaurentPoly::constant(nroots, 1);
    if (n > 1) s[1] = beta.to_poly();
    mul_graded(s);
  }
  for (const auto& alpha : sources) {
    // 1 / (1 + a) = sum (-a)^k
    std::vector<LaurentPoly> s(n, LaurentPoly(nroots));
    s[0] = LaurentPoly::constant(nroots, 1);
    LaurentPoly minus_a = -alpha.to_poly();
    for (std::size_t k = 1; k < n; ++k) s[k] = s[k - 1] * minus_a;
    mul_graded(s);
  }
  return total;
}

/// Evaluates tp with c_k := degree-k part of prod(1 + targets) / prod(1 + sources).
inline LaurentPoly substitute_chern_roots(const ChernPolynomial& tp, const std::vector<LinForm>& targets,
                                          const std::vector<LinForm>& sources, int degree_cap) {
  if (degree_cap < tp.codim())
    throw std::invalid_argument("degree cap " + std::to_string(degree_cap) + " is below the codimension " +
                                std::to_string(tp.codim()));
  const auto c = quotient_chern_classes(targets, sources, degree_cap);
  const std::size_t nroots = c[0].nvars();
  LaurentPoly out(nroots);
  for (const auto& [m, coeff] : tp.terms()) {
    LaurentPoly term = LaurentPoly::constant(nroots, Rational(coeff));
    for (int i : m) term *= c[static_cast<std::size_t>(i)];
    out += term;
  }
  return out;
}

struct EquivalenceResult {
  bool equivalent = false;
  std::string reason;
  std::optional<int> ell;               // first relative dimension where the polynomials differ
  std::optional<ChernMonomial> term;    // a Chern monomial with differing coefficients
  std::optional<Integer> coefficient_a, coefficient_b;

  explicit operator bool() const { return equivalent; }
};

/// Bounded check that a and b give the same Thom polynomial for every ell in [-1, ell_max].
/// Passing is evidence, not proof, of equivalence for all ell.
inline EquivalenceResult series_equivalent(const RationalGF& a, const RationalGF& b, int ell_max) {
  EquivalenceResult r;
  if (a.nvars() != b.nvars()) {
    r.reason = "mu mismatch (" + std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")";
    return r;
  }
  if (a.homogeneous_degree() != b.homogeneous_degree()) {
    r.reason = "degree mismatch (" + std::to_string(a.homogeneous_degree()) + " vs " +
               std::to_string(b.homogeneous_degree()) + ")";
    return r;
  }
  for (int ell = -1; ell <= ell_max; ++ell) {
    auto ta = thom_polynomial(a, ell);
    auto tb = thom_polynomial(b, ell);
    if (ta == tb) continue;
    r.ell = ell;
    r.reason = "Thom polynomials differ at ell = " + std::to_string(ell);
    for (const auto& [m, c] : ta.terms())
      if (tb.coefficient(m) != c) {
        r.term = m;
        break;
      }
    if (!r.term)
      for (const auto& [m, c] : tb.terms())
        if (ta.coefficient(m) != c) {
          r.term = m;
          break;
        }
    r.coefficient_a = ta.coefficient(*r.term);
    r.coefficient_b = tb.coefficient(*r.term);
    return r;
  }
  r.equivalent = true;
  r.reason = "Thom polynomials agree for ell in [-1, " + std::to_string(ell_max) + "]";
  return r;
}

enum class RenderStyle { numeric, symbolic_ell };

namespace detail {

inline std::string symbolic_index(int index, int ell) {
  int offset = index - ell;
  if (offset == 0) return "c_l";
  return "c_{l" + std::string(offset > 0 ? "+" : "-") + std::to_string(std::abs(offset)) + "}";
}

inline std::string render_chern_monomial(const ChernMonomial& m, int ell, int mu, RenderStyle style) {
  ChernMonomial factors = m;
  if (style == RenderStyle::symbolic_ell)
    factors.resize(static_cast<std::size_t>(mu), 0);  // dropped c_0 factors are c_{l-(ell)}
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    std::string base = style == RenderStyle::numeric ? "c" + std::to_string(factors[i])
                                                     : symbolic_index(factors[i], ell);
    if (!out.empty()) out += ' ';
    out += base;
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace detail

/// "c5^2 c3 - c6 c4 c3 + ..." (numeric) or "c_{l+2}^2 c_l - ..." (symbolic_ell).
inline std::string render(const ChernPolynomial& tp, RenderStyle style = RenderStyle::numeric) {
  if (tp.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : tp.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono = detail::render_chern_monomial(m, tp.ell(), tp.mu(), style);
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + " " + mono;
  }
  return out;
}

}  // namespace thomgen
