#pragma once

// Verification suites behind `thomgen verify`. Each check compares a computed value
// against a published value or identity and records expected and actual on failure.

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <thomgen/thomgen.hpp>

namespace thomgen::suites {

struct Check {
  std::string name;
  bool ok = false;
  std::string expected, actual;  // filled for failures
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return !checks.empty();
  }
};

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Offsets from ell, e.g. {4, 3, -1} at ell = 2 -> (6, 5, 1).
inline std::vector<int> shifted(const std::vector<int>& offsets, int ell) {
  std::vector<int> out;
  for (int o : offsets) out.push_back(ell + o);
  return out;
}

inline void expect_equal(std::vector<Check>& out, std::string name, const std::string& expected,
                         const std::string& actual) {
  bool ok = expected == actual;
  out.push_back({std::move(name), ok, ok ? "" : expected, ok ? "" : actual});
}

inline void expect_true(std::vector<Check>& out, std::string name, bool ok, const std::string& detail = "") {
  out.push_back({std::move(name), ok, ok ? "" : "true", ok ? "" : detail.empty() ? "false" : detail});
}

inline const CatalogEntry& entry(const std::string& name) {
  static std::map<std::string, CatalogEntry> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, get_entry(name)).first;
  return it->second;
}

}  // namespace detail

inline std::vector<Check> porteous() {
  std::vector<Check> out;
  for (int mu = 1; mu <= 4; ++mu)
    for (int ell = 0; ell <= 4; ++ell) {
      auto se = schur_expansion(get_entry("Sigma", {mu}).variants.front().ktilde_form(), ell);
      SchurExpansion want(ell, mu, static_cast<long>(ell + 1) * mu + static_cast<long>(mu) * (mu - 1));
      want.add_term(Partition(static_cast<std::size_t>(mu), ell + mu), 1);
      detail::expect_equal(out, "Sigma^" + std::to_string(mu) + " ell=" + std::to_string(ell), render(want),
                           render(se));
    }
  return out;
}

inline std::vector<Check> i22() {
  std::vector<Check> out;
  const auto& e = detail::entry("I22");

  // Laurent coefficients of K_{2,1} at ell = 3.
  const std::vector<std::pair<ExponentVector, int>> laurent = {
      {{1, 1, -1}, 1},  {{2, 0, -1}, -1}, {{3, 0, -2}, -2}, {{1, 2, -2}, 2},  {{4, 0, -3}, -4}, {{2, 2, -3}, 1},
      {{1, 3, -3}, 4},  {{3, 1, -3}, -1}, {{5, 0, -4}, -8}, {{2, 3, -4}, 3},  {{1, 4, -4}, 8},  {{4, 1, -4}, -3}};
  const auto ex = expand(e.variants[0].k_form(), 3);
  for (const auto& [exp, c] : laurent)
    detail::expect_equal(out, "K_{2,1} coefficient of " + monomial_string(exp), std::to_string(c),
                         to_string(ex.coefficient(exp)));

  // Chern coefficients, as offsets from ell, at ell = 3 and 4.
  const std::vector<std::pair<std::vector<int>, int>> chern = {
      {{2, 2, 0}, 1},   {{3, 1, 0}, -1}, {{4, 1, -1}, -2}, {{3, 2, -1}, 2},  {{5, 1, -2}, -4},
      {{3, 3, -2}, 1},  {{4, 2, -2}, 3}, {{6, 1, -3}, -8}, {{4, 3, -3}, 3},  {{5, 2, -3}, 5}};
  for (int ell : {3, 4}) {
    const auto tp = thom_polynomial(e.variants[0].k_form(), ell);
    for (const auto& [off, c] : chern)
      detail::expect_equal(out, "Tp ell=" + std::to_string(ell) + " c(" + detail::join(detail::shifted(off, ell)) + ")",
                           std::to_string(c), to_string(tp.coefficient(detail::shifted(off, ell))));
  }

  // Schur coefficients at ell = 3.
  const std::vector<std::pair<std::vector<int>, int>> schur = {
      {{2, 2, 0}, 1}, {{3, 2, -1}, 3}, {{3, 3, -2}, 3}, {{4, 2, -2}, 7}, {{4, 3, -3}, 10}, {{5, 2, -3}, 15}};
  const auto se = schur_expansion(e.variants[1].ktilde_form(), 3);
  for (const auto& [off, c] : schur)
    detail::expect_equal(out, "Schur ell=3 Delta(" + detail::join(detail::shifted(off, 3)) + ")", std::to_string(c),
                         to_string(se.coefficient(detail::shifted(off, 3))));

  // Closed form for the coefficients of 1/2 K~_{0,1,1,0,1}: t1^k t2^(j+1) t3^(-k-j).
  const auto kt = expand_in_box(e.variants[1].ktilde_form(), ExpansionBox(1, {0, 1, -6}));
  for (int k = 0; k <= 6; ++k)
    for (int j = 0; k + j <= 6; ++j) {
      Rational want = 0;
      for (int i = 0; i <= k; ++i) {
        const int p = k - i - 1;
        want += Rational(binomial(i + j, i)) * (p >= 0 ? Rational(Integer(1) << p) : Rational(1, 2));
      }
      detail::expect_equal(out, "closed form k=" + std::to_string(k) + " j=" + std::to_string(j), to_string(want),
                           to_string(kt.coefficient(ExponentVector{k, j + 1, -k - j})));
    }

  auto eq = series_equivalent(e.variants[0].k_form(), e.variants[1].k_form(), 3);
  detail::expect_true(out, "K_{2,1} ~ 1/2 K_{0,1,1,0,1} for ell in [-1,3]", eq.equivalent, eq.reason);

  for (int ell = 0; ell <= 2; ++ell)
    detail::expect_true(out, "Schur to Chern ell=" + std::to_string(ell),
                        schur_to_chern(schur_expansion(e.variants[1].ktilde_form(), ell)) ==
                            thom_polynomial(e.variants[0].k_form(), ell));
  return out;
}

inline std::vector<Check> iii23() {
  std::vector<Check> out;
  const auto& e = detail::entry("III23");
  for (std::size_t a = 0; a < e.variants.size(); ++a)
    for (std::size_t b = a + 1; b < e.variants.size(); ++b) {
      auto eq = series_equivalent(e.variants[a].k_form(), e.variants[b].k_form(), 3);
      detail::expect_true(out, "variants " + std::to_string(a) + " ~ " + std::to_string(b) + " for ell in [-1,3]",
                          eq.equivalent, eq.reason);
    }
  for (int ell = 0; ell <= 3; ++ell) {
    SchurExpansion want(ell, 3, 3L * (ell + 1) + 2);
    for (int i = 1; i <= ell + 2; ++i) want.add_term({ell + 1 + i, ell + 2, ell + 2 - i}, Integer(1) << i);
    detail::expect_equal(out, "Schur closed form ell=" + std::to_string(ell), render(want),
                         render(schur_expansion(e.variants[2].ktilde_form(), ell)));
  }
  for (int ell = 0; ell <= 2; ++ell)
    detail::expect_true(out, "Schur to Chern ell=" + std::to_string(ell),
                        schur_to_chern(schur_expansion(e.variants[2].ktilde_form(), ell)) ==
                            thom_polynomial(e.variants[0].k_form(), ell));
  return out;
}

inline std::vector<Check> sigma211() {
  std::vector<Check> out;
  const auto& e = detail::entry("Sigma211");
  detail::expect_true(out, "two forms are equal rational functions",
                      gf_equal_exact(e.variants[0].k_form(), e.variants[1].k_form()));
  // Equation weights plus the hyperplane q_{2,2}^5 = 0 give the printed factor of the first form.
  const DimensionVector d = e.variants[0].dimvec;
  const auto coords = coordinates(d);
  std::vector<QCoordinate> zero;
  for (const auto& q : coords)
    if (q.i == 2 && q.j == 2 && q.k == 5) zero.push_back(q);
  detail::expect_equal(out, "multidegree of the first form", parse_factor(e.variants[0].factor, d.mu()).str(),
                       ci_multidegree(static_cast<std::size_t>(d.mu()), assoc_equations(d), zero).str());
  return out;
}

inline std::vector<Check> cgamma() {
  std::vector<Check> out;
  const auto& e = detail::entry("Cgamma");
  for (int ell = 0; ell <= 1; ++ell) {
    const auto base = thom_polynomial(e.variants[0].k_form(), ell);
    for (std::size_t v = 1; v < e.variants.size(); ++v)
      detail::expect_true(out, "variant " + std::to_string(v) + " ~ variant 0 at ell=" + std::to_string(ell),
                          thom_polynomial(e.variants[v].k_form(), ell) == base);
  }
  // Shapes and coefficients as printed, offsets from ell.
  const std::vector<std::pair<std::vector<int>, int>> printed = {
      {{3, 3, 3, 1, 0, 0}, 4},       {{4, 3, 3, 3, 0, 0}, 8},       {{4, 3, 3, 1, 0, -1}, 18},
      {{4, 4, 3, 0, 0, -1}, 32},     {{4, 4, 3, 1, -1, -1}, 40},    {{4, 4, 4, 0, -1, -1}, 80},
      {{5, 3, 3, 0, 0, -1}, 32},     {{5, 3, 3, 1, -1, -1}, 20},    {{5, 4, 3, 0, -1, -1}, 120},
      {{5, 3, 3, -1, -1, -1}, 160},  {{5, 5, 3, -1, -1, -1}, 80},   {{6, 3, 3, 0, -1, -1}, 40},
      {{6, 4, 3, -1, -1, -1}, 112},  {{7, 3, 3, -1, -1, -1}, 16}};
  const int ell = 2;
  std::optional<SchurExpansion> se;
  try {
    se = schur_expansion(e.variants[0].ktilde_form(), ell);
    detail::expect_true(out, "Schur coefficients at ell=2 are integral", true);
  } catch (const IntegralityError& err) {
    detail::expect_true(out, "Schur coefficients at ell=2 are integral", false, err.what());
    return out;
  }
  for (const auto& [off, c] : printed)
    detail::expect_equal(out, "Delta(" + detail::join(detail::shifted(off, ell)) + ")", std::to_string(c),
                         to_string(se->coefficient(detail::shifted(off, ell))));
  return out;
}

inline std::vector<Check> sigma222() {
  std::vector<Check> out;
  const auto& e = detail::entry("Sigma222");
  // Roots: beta, alpha1, alpha2.
  const LinForm beta{1, 0, 0}, a1{0, 1, 0}, a2{0, 0, 1};
  LaurentPoly want = LaurentPoly::constant(3, 1);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j)
      if (i + j >= 1) want *= LinForm{1, -i, -j}.to_poly();
  std::vector<ChernPolynomial> tps;
  for (std::size_t v = 0; v < e.variants.size(); ++v) {
    tps.push_back(thom_polynomial(e.variants[v].k_form(), -1));
    detail::expect_equal(out, "variant " + std::to_string(v) + " specialization", want.str(),
                         substitute_chern_roots(tps.back(), {beta}, {a1, a2}, 9).str());
  }
  detail::expect_true(out, "variants agree at ell=-1", tps[0] == tps[1]);
  return out;
}

inline std::vector<Check> euler() {
  std::vector<Check> out;
  auto sorted = [](std::vector<LinForm> v) {
    std::vector<std::vector<long>> keys;
    for (const auto& f : v) keys.push_back(f.coeffs());
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  for (const auto& e : thomgen::detail::fixed_table())
    for (const auto& v : e.variants)
      detail::expect_true(out, e.name + " " + v.dimvec.str(),
                          sorted(euler_class(v.dimvec)) == sorted(k_denominator(v.dimvec)));
  const int counts[] = {0, 1, 3, 7, 13, 22};
  for (int mu = 1; mu <= 6; ++mu)
    detail::expect_equal(out, "coordinates of (1^" + std::to_string(mu) + ")", std::to_string(counts[mu - 1]),
                         std::to_string(coordinates(DimensionVector(std::vector<int>(mu, 1))).size()));
  return out;
}

inline std::vector<Check> catalog_meta() {
  std::vector<Check> out;
  for (const auto& e : thomgen::detail::fixed_table())
    for (std::size_t i = 0; i < e.variants.size(); ++i) {
      const auto& v = e.variants[i];
      const auto gf = v.k_form();
      const std::string tag = e.name + "#" + std::to_string(i) + " ";
      detail::expect_equal(out, tag + "mu", std::to_string(e.mu), std::to_string(gf.nvars()));
      detail::expect_equal(out, tag + "d", std::to_string(e.d), std::to_string(gf.homogeneous_degree()));
      if (v.c_recorded)
        detail::expect_equal(out, tag + "c", std::to_string(v.c), std::to_string(reduce(gf).denominator().size()));
    }
  return out;
}

inline const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>> r = {
      {"porteous", porteous}, {"i22", i22},           {"iii23", iii23}, {"sigma211", sigma211},
      {"cgamma", cgamma},     {"sigma222", sigma222}, {"euler", euler}, {"catalog-meta", catalog_meta}};
  return r;
}

inline SuiteReport run(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      const auto start = std::chrono::steady_clock::now();
      SuiteReport r{n, fn(), 0};
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace thomgen::suites
