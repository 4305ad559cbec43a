#pragma once

// Delta symbols Delta_{l1..lmu} = det|c_{l_i - i + j}|, their normal form as signed
// Schur functions, Schur expansions of K~-type generating functions, and the
// Jacobi-Trudi conversion back to Chern monomials.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thom.hpp"

namespace thomgen {

/// Non-increasing positive parts; trailing zeros are never stored.
using Partition = std::vector<int>;

struct DeltaSymbol {
  std::vector<int> seq;
};

struct StraightenedDelta {
  int sign;
  Partition partition;
  friend bool operator==(const StraightenedDelta&, const StraightenedDelta&) = default;
};

/// Rewrites Delta_seq as sign * Delta_partition, or nullopt when the determinant vanishes.
///
/// With keys k_j = seq_j - j the matrix rows are (c_{k_j + 1}, ..., c_{k_j + mu}); equal keys
/// give equal rows and a key below -mu gives a zero row. Otherwise sorting the rows by key
/// turns the matrix into the Jacobi-Trudi matrix of a partition.
inline std::optional<StraightenedDelta> straighten(const DeltaSymbol& d) {
  const int mu = static_cast<int>(d.seq.size());
  std::vector<int> keys(d.seq.size());
  for (int j = 0; j < mu; ++j) {
    keys[j] = d.seq[j] - (j + 1);
    if (keys[j] < -mu) return std::nullopt;
  }
  // Insertion sort into decreasing order, counting transpositions.
  int swaps = 0;
  for (int i = 1; i < mu; ++i)
    for (int j = i; j > 0 && keys[j - 1] <= keys[j]; --j) {
      if (keys[j - 1] == keys[j]) return std::nullopt;
      std::swap(keys[j - 1], keys[j]);
      ++swaps;
    }
  StraightenedDelta out{swaps % 2 ? -1 : 1, {}};
  for (int j = 0; j < mu; ++j) out.partition.push_back(keys[j] + j + 1);
  while (!out.partition.empty() && out.partition.back() == 0) out.partition.pop_back();
  return out;
}

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

class SchurExpansion {
 public:
  using TermMap = std::map<Partition, Integer>;

  SchurExpansion(int ell, int mu, long codim) : ell_(ell), mu_(mu), codim_(codim) {}

  int ell() const { return ell_; }
  int mu() const { return mu_; }
  long codim() const { return codim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(Partition p) const {
    while (!p.empty() && p.back() == 0) p.pop_back();
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(Partition p, const Integer& c) {
    if (c == 0) return;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (!std::is_sorted(p.begin(), p.end(), std::greater<>()) || (!p.empty() && p.back() < 0))
      throw std::invalid_argument("Schur term is not indexed by a partition");
    if (static_cast<int>(p.size()) > mu_) throw std::invalid_argument("partition has more than mu parts");
    if (partition_size(p) != codim_) throw std::logic_error("partition size differs from the codimension");
    auto [it, inserted] = terms_.try_emplace(std::move(p), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
    return a.ell_ == b.ell_ && a.codim_ == b.codim_ && a.terms_ == b.terms_;
  }

 private:
  int ell_;
  int mu_;
  long codim_;
  TermMap terms_;
};

/// Schur expansion of the Thom polynomial whose K~-type generating function is gf:
/// each expansion monomial t^i contributes Delta_{ell+1+i_1, ..., ell+1+i_mu}.
inline SchurExpansion schur_expansion(const RationalGF& gf, int ell, const ExpandOptions& opts = {}) {
  check_ell(gf.nvars(), ell, opts);
  detail::check_expandable(gf);
  const std::size_t mu = gf.nvars();
  const long d = gf.homogeneous_degree();
  const auto raw = detail::expand_raw(gf, ExpansionBox::for_schur(mu, ell, d));

  std::map<Partition, Integer> acc;
  DeltaSymbol delta{std::vector<int>(mu)};
  for (const auto& [k, c] : raw.terms) {
    for (std::size_t i = 0; i < mu; ++i) delta.seq[i] = chern_index(ell, k[i]);
    if (auto s = straighten(delta)) acc[s->partition] += s->sign > 0 ? c : Integer(-c);
  }

  SchurExpansion out(ell, static_cast<int>(mu), static_cast<long>(ell + 1) * static_cast<long>(mu) + d);
  for (const auto& [p, raw_c] : acc) {
    if (raw_c == 0) continue;
    const Rational c = Rational(raw_c) * raw.scale;
    if (!is_integral(c)) {
      std::string shape;
      for (int x : p) shape += (shape.empty() ? "" : ",") + std::to_string(x);
      throw IntegralityError("non-integral Schur coefficient " + to_string(c) + " at (" + shape +
                             ") (ell = " + std::to_string(ell) + ")");
    }
    out.add_term(p, numerator_of(c));
  }
  return out;
}

namespace detail {

inline void jacobi_trudi_terms(const Partition& lambda, std::size_t row, std::vector<bool>& used,
                               ChernMonomial& current, int sign, const Integer& coeff, ChernPolynomial& out) {
  const std::size_t n = lambda.size();
  if (row == n) {
    out.add_term(current, sign * coeff);
    return;
  }
  // Columns j >= row with c_{lambda_row - row + j} nonzero; the sign tracks inversions.
  int inversions_before = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) {
      ++inversions_before;
      continue;
    }
    const int idx = lambda[row] - static_cast<int>(row) + static_cast<int>(j);
    if (idx < 0) continue;
    // Placing column j now creates one inversion with every unused smaller column.
    const int smaller_unused = static_cast<int>(j) - inversions_before;
    used[j] = true;
    if (idx > 0) current.push_back(idx);
    jacobi_trudi_terms(lambda, row + 1, used, current, smaller_unused % 2 ? -sign : sign, coeff, out);
    if (idx > 0) current.pop_back();
    used[j] = false;
  }
}

}  // namespace detail

/// Adds coeff * Delta_lambda, expanded as det|c_{lambda_i - i + j}|, to out.
inline void add_delta(ChernPolynomial& out, const Partition& lambda, const Integer& coeff) {
  std::vector<bool> used(lambda.size(), false);
  ChernMonomial current;
  detail::jacobi_trudi_terms(lambda, 0, used, current, 1, coeff, out);
}

inline ChernPolynomial delta_to_chern(const Partition& lambda, int ell, int mu) {
  ChernPolynomial out(ell, mu, partition_size(lambda));
  add_delta(out, lambda, 1);
  return out;
}

inline ChernPolynomial schur_to_chern(const SchurExpansion& se) {
  ChernPolynomial out(se.ell(), se.mu(), se.codim());
  for (const auto& [p, c] : se.terms()) add_delta(out, p, c);
  return out;
}

/// "Δ_{5,5,3} + 3 Δ_{6,5,2}" (numeric) or "Δ_{l+2,l+2,l} + ..." (symbolic_ell, padded to mu parts).
inline std::string render(const SchurExpansion& se, RenderStyle style = RenderStyle::numeric) {
  if (se.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : se.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mag != 1) out += mag.str() + " ";
    Partition parts = p;
    if (style == RenderStyle::symbolic_ell) parts.resize(static_cast<std::size_t>(se.mu()), 0);
    std::string idx;
    for (int x : parts) {
      if (!idx.empty()) idx += ',';
      if (style == RenderStyle::numeric) {
        idx += std::to_string(x);
      } else {
        int off = x - se.ell();
        idx += off == 0 ? "l" : "l" + std::string(off > 0 ? "+" : "-") + std::to_string(std::abs(off));
      }
    }
    out += "Δ_{" + idx + "}";
  }
  return out;
}

}  // namespace thomgen
