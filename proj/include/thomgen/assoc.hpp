#pragma once

// Coordinates q_{i,j}^k on the space of graded commutative nilpotent algebra
// structures with a given dimension vector, their torus weights, and the
// quadratic associativity equations between them.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genfun.hpp"

namespace thomgen {

/// Structure constant q_{i,j}^k (1-based, i <= j) with torus weight t_k - t_i - t_j.
struct QCoordinate {
  int i, j, k;
  LinForm multidegree;

  std::string str() const {
    return "q_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(k);
  }
  friend bool operator==(const QCoordinate& a, const QCoordinate& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
};

/// All q_{i,j}^k with i <= j and w(k) >= w(i) + w(j), ordered by (i, j, k).
inline std::vector<QCoordinate> coordinates(const DimensionVector& d) {
  const auto w = weight_profile(d).weights;
  const int mu = static_cast<int>(w.size());
  std::vector<QCoordinate> out;
  for (int i = 1; i <= mu; ++i)
    for (int j = i; j <= mu; ++j)
      for (int k = 1; k <= mu; ++k)
        if (w[k - 1] >= w[i - 1] + w[j - 1])
          out.push_back({i, j, k,
                         LinForm::top_minus(static_cast<std::size_t>(mu), static_cast<std::size_t>(k - 1),
                                            {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)})});
  return out;
}

/// Torus weights of all coordinates; as a multiset this is the denominator of K_d.
inline std::vector<LinForm> euler_class(const DimensionVector& d) {
  std::vector<LinForm> out;
  for (const auto& q : coordinates(d)) out.push_back(q.multidegree);
  return out;
}

/// One quadratic term coefficient * a * b, with a and b indices into coordinates(d).
struct QuadraticTerm {
  Integer coefficient;
  std::size_t a, b;
};

struct AssocEquation {
  int i, j, k, n;
  std::vector<QuadraticTerm> terms;  // in order of first appearance
  LinForm multidegree;               // t_n - t_i - t_j - t_k
};

namespace detail {

class CoordinateIndex {
 public:
  explicit CoordinateIndex(const std::vector<QCoordinate>& coords, int mu) : mu_(mu) {
    table_.assign(static_cast<std::size_t>(mu * mu * mu), -1);
    for (std::size_t x = 0; x < coords.size(); ++x) table_[slot(coords[x].i, coords[x].j, coords[x].k)] = static_cast<long>(x);
  }

  /// Index of q_{i,j}^k with i, j in either order, if the coordinate exists.
  std::optional<std::size_t> find(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    long x = table_[slot(i, j, k)];
    if (x < 0) return std::nullopt;
    return static_cast<std::size_t>(x);
  }

 private:
  std::size_t slot(int i, int j, int k) const {
    return static_cast<std::size_t>(((i - 1) * mu_ + (j - 1)) * mu_ + (k - 1));
  }
  int mu_;
  std::vector<long> table_;
};

inline void add_quadratic(std::vector<QuadraticTerm>& terms, std::size_t a, std::size_t b, const Integer& c) {
  auto same = [&](const QuadraticTerm& t) { return (t.a == a && t.b == b) || (t.a == b && t.b == a); };
  auto it = std::find_if(terms.begin(), terms.end(), same);
  if (it == terms.end()) {
    terms.push_back({c, a, b});
    return;
  }
  it->coefficient += c;
  if (it->coefficient == 0) terms.erase(it);
}

// Canonical form for comparing equations: sorted (min, max, coefficient) triples.
inline std::vector<std::tuple<std::size_t, std::size_t, Integer>> canonical(const std::vector<QuadraticTerm>& terms,
                                                                            int sign) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> out;
  for (const auto& t : terms) out.emplace_back(std::min(t.a, t.b), std::max(t.a, t.b), sign * t.coefficient);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Nontrivial associativity equations
///   sum_m q_{i,j}^m q_{m,k}^n - sum_m q_{i,m}^n q_{j,k}^m = 0
/// over quadruples with i <= j and w(i) + w(j) + w(k) <= w(n). Equations that vanish
/// identically are dropped, and each equation is reported once up to sign, under the
/// lexicographically first (i, j, k, n) that produces it.
inline std::vector<AssocEquation> assoc_equations(const DimensionVector& d) {
  const auto w = weight_profile(d).weights;
  const int mu = static_cast<int>(w.size());
  const auto coords = coordinates(d);
  const detail::CoordinateIndex index(coords, mu);

  std::vector<AssocEquation> out;
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Integer>>> seen;
  for (int i = 1; i <= mu; ++i)
    for (int j = i; j <= mu; ++j)
      for (int k = 1; k <= mu; ++k)
        for (int n = 1; n <= mu; ++n) {
          if (w[i - 1] + w[j - 1] + w[k - 1] > w[n - 1]) continue;
          std::vector<QuadraticTerm> terms;
          for (int m = 1; m <= mu; ++m) {
            auto a = index.find(i, j, m), b = index.find(m, k, n);
            if (a && b) detail::add_quadratic(terms, *a, *b, 1);
            auto c = index.find(i, m, n), e = index.find(j, k, m);
            if (c && e) detail::add_quadratic(terms, *c, *e, -1);
          }
          if (terms.empty()) continue;
          auto key = detail::canonical(terms, 1);
          if (std::find(seen.begin(), seen.end(), key) != seen.end() ||
              std::find(seen.begin(), seen.end(), detail::canonical(terms, -1)) != seen.end())
            continue;
          seen.push_back(std::move(key));
          out.push_back({i, j, k, n, std::move(terms),
                         LinForm::top_minus(static_cast<std::size_t>(mu), static_cast<std::size_t>(n - 1),
                                            {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                                             static_cast<std::size_t>(k - 1)})});
        }
  return out;
}

/// "q_{1,1}^2 q_{2,2}^4 - q_{1,3}^4 q_{1,2}^3"
inline std::string render(const AssocEquation& eq, const std::vector<QCoordinate>& coords) {
  std::string out;
  for (const auto& t : eq.terms) {
    Integer mag = t.coefficient < 0 ? Integer(-t.coefficient) : t.coefficient;
    out += out.empty() ? (t.coefficient < 0 ? "-" : "") : (t.coefficient < 0 ? " - " : " + ");
    if (mag != 1) out += mag.str() + " ";
    out += t.a == t.b ? "(" + coords[t.a].str() + ")^2" : coords[t.a].str() + " " + coords[t.b].str();
  }
  return out.empty() ? "0" : out;
}

/// Multidegree of the complete intersection cut out by eqs together with the
/// coordinate hyperplanes {q = 0} for q in zero_coords: the product of their weights.
/// Regularity of the sequence is the caller's responsibility.
inline LaurentPoly ci_multidegree(std::size_t nvars, const std::vector<AssocEquation>& eqs,
                                  const std::vector<QCoordinate>& zero_coords = {}) {
  LaurentPoly out = LaurentPoly::constant(nvars, 1);
  for (const auto& e : eqs) out *= e.multidegree.to_poly();
  for (const auto& q : zero_coords) out *= q.multidegree.to_poly();
  return out;
}

/// Factor list form of ci_multidegree, in equation order then coordinate order.
inline std::vector<LinForm> ci_multidegree_factors(const std::vector<AssocEquation>& eqs,
                                                   const std::vector<QCoordinate>& zero_coords = {}) {
  std::vector<LinForm> out;
  for (const auto& e : eqs) out.push_back(e.multidegree);
  for (const auto& q : zero_coords) out.push_back(q.multidegree);
  return out;
}

}  // namespace thomgen
