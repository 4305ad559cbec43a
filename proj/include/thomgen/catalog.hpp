#pragma once

// Built-in registry of generating functions for Thom polynomials of contact
// singularities, including the parametric families Sigma^r, Phi_{m,r} and
// Sigma^{a,b}.

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "exprparse.hpp"

namespace thomgen {

struct CatalogVariant {
  DimensionVector dimvec;
  std::string factor = "1";          // product of homogeneous factors in t1..t_mu
  Rational scalar = 1;
  long c = 0;                        // linear factors left in the denominator after reduce
  bool c_recorded = true;            // false when the table leaves c blank and it was computed

  std::size_t mu() const { return static_cast<std::size_t>(dimvec.mu()); }

  std::vector<LaurentPoly> factors() const { return parse_factor_list(factor, mu()); }

  /// scalar * factor * K_d, the generating function for the Chern-monomial expansion.
  RationalGF k_form() const { return assemble(k_function(dimvec)); }
  /// scalar * factor * K~_d, the generating function for the Schur expansion.
  RationalGF ktilde_form() const { return assemble(ktilde_function(dimvec)); }

  friend bool operator==(const CatalogVariant& a, const CatalogVariant& b) {
    return a.dimvec == b.dimvec && a.factor == b.factor && a.scalar == b.scalar;
  }

 private:
  RationalGF assemble(RationalGF gf) const {
    gf = gf.scaled(scalar);
    for (const auto& f : factors()) gf = gf.multiplied(f);
    return gf;
  }
};

struct CatalogEntry {
  std::string name;
  std::vector<int> params;
  int mu = 0;
  long d = 0;
  std::vector<CatalogVariant> variants;
  std::string notes;
};

struct CatalogListing {
  std::string name;
  std::string params;  // parameter names for families, empty otherwise
  std::string mu, d;   // numbers, or formulas for families
  std::size_t variants;
};

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline CatalogVariant variant(std::vector<int> d, long c, std::string factor = "1", Rational scalar = 1) {
  return CatalogVariant{DimensionVector(std::move(d)), std::move(factor), std::move(scalar), c, true};
}

// (t_k - 2 t1 - t2)(t_k - t1 - 2 t2) style products, written out term by term.
inline std::string product_string(const std::vector<std::string>& factors) {
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "(" : "*(") + f + ")";
  return s;
}

inline std::string sigma222_first_factor() {
  std::vector<std::string> f;
  for (int k = 6; k <= 9; ++k) {
    f.push_back("t" + std::to_string(k) + "-2*t1-t2");
    f.push_back("t" + std::to_string(k) + "-t1-2*t2");
  }
  return product_string(f);
}

inline std::string sigma222_second_factor() {
  std::vector<std::string> f;
  for (int k = 7; k <= 9; ++k) f.push_back("t" + std::to_string(k) + "-2*t1-t2");
  for (int k = 8; k <= 9; ++k) f.push_back("t" + std::to_string(k) + "-t1-2*t2");
  return "t1*" + product_string(f);
}

inline const std::vector<CatalogEntry>& fixed_table() {
  static const std::vector<CatalogEntry> table = [] {
    std::vector<CatalogEntry> t;
    auto add = [&](std::string name, int mu, long d, std::vector<CatalogVariant> v, std::string notes = "") {
      t.push_back(CatalogEntry{std::move(name), {}, mu, d, std::move(v), std::move(notes)});
    };
    add("A1", 1, 0, {variant({1}, 0)}, "A1 = Sigma^1");
    add("A2", 2, 0, {variant({1, 1}, 1)}, "A2 = Sigma^{1,1}");
    add("Sigma2", 2, 2, {variant({2}, 0)});
    add("A3", 3, 0, {variant({1, 1, 1}, 3)}, "A3 = Sigma^{1,1,1}");
    add("I22", 3, 1, {variant({2, 1}, 3), variant({0, 1, 1, 0, 1}, 2, "1", Rational(1, 2))}, "I22 = Phi_{2,0}");
    add("III23", 3, 2,
        {variant({2, 1}, 2, "2*(t3-t1-t2)"), variant({1, 2}, 2), variant({0, 1, 1, 1}, 1)},
        "III23 = Phi_{2,1}");
    add("Sigma3", 3, 6, {variant({3}, 0)});
    add("A4", 4, 0, {variant({1, 1, 1, 1}, 7, "t4-2*t1-t2")}, "A4 = Sigma^{1,1,1,1}");
    add("I23", 4, 1,
        {variant({2, 1, 1}, 8, "(t4-2*t1-t2)*(t4-t1-2*t2)-(t4-t2-t3)*(t4-t1-t3)"),
         variant({0, 1, 1, 1, 0, 1}, 5)});
    add("III33", 4, 2, {variant({2, 2}, 6), variant({0, 0, 1, 1, 0, 1, 0, 1}, 4, "1", Rational(1, 2))});
    add("III24", 4, 2,
        {variant({1, 2, 1}, 5), variant({1, 1, 2}, 5), variant({0, 1, 0, 1, 1, 1}, 4),
         variant({0, 0, 1, 0, 1, 1, 0, 0, 1}, 4)});
    add("Sigma21", 4, 3,
        {variant({2, 2}, 6, "2*(t3+t4-2*t1-2*t2)"), variant({0, 1, 1, 0, 2}, 4), variant({0, 1, 1, 1, 1}, 3)});
    add("Phi30", 4, 3, {variant({3, 1}, 6), variant({0, 0, 1, 1, 1, 0, 0, 1}, 3, "t4-2*t1", Rational(-1, 4))},
        "scalar -1/4 recorded as printed");
    add("Phi31", 4, 4,
        {variant({3, 1}, 6, "3*t4-2*t1-2*t2-2*t3"), variant({0, 2, 1, 1}, 3),
         variant({0, 0, 1, 1, 1, 0, 1}, 2, "1", Rational(1, 2))});
    add("Phi32", 4, 6, {variant({3, 1}, 3, "4*(t4-t1-t2)*(t4-t2-t3)*(t4-t1-t3)"), variant({0, 1, 2, 1}, 1)});
    add("Sigma4", 4, 12, {variant({4}, 0)});
    {
      auto second = variant({0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1}, 0, "t6-2*t1-t2");
      second.c = static_cast<long>(reduce(second.k_form()).denominator().size());
      second.c_recorded = false;
      add("Sigma211", 6, 4, {variant({0, 1, 1, 1, 1, 1, 1}, 12, "(t6-2*t1-t2)*(t5-2*t2)"), second},
          "c of the second variant is not tabulated; computed");
    }
    add("Sigma221", 8, 7,
        {variant({0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1}, 24, "(t7-2*t1-t2)*(t8-2*t1-t2)*(t8-t1-2*t2)")});
    add("Sigma222", 9, 9,
        {variant({2, 3, 4}, 45, sigma222_first_factor()),
         variant({0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1}, 33, sigma222_second_factor())});
    add("Cgamma", 6, 4,
        {variant({3, 3}, 18, "4*(t4+t5+t6-2*t1-2*t2-2*t3)"), variant({0, 2, 1, 0, 3}, 15),
         variant({0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1}, 11, "1", Rational(1, 2)), variant({0, 0, 1, 2, 0, 1, 0, 2}, 13),
         variant({0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 0, 1}, 11, "1", Rational(1, 2))},
        "net of conics with fixed modulus");
    add("Cstar", 6, 3, {variant({3, 3}, 18)}, "union of C_gamma over all gamma");
    return t;
  }();
  return table;
}

inline const CatalogEntry* find_fixed(const std::string& name) {
  for (const auto& e : fixed_table())
    if (e.name == name) return &e;
  return nullptr;
}

inline std::string alias_target(const std::string& name) {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"Sigma1", "A1"},   {"Sigma11", "A2"},     {"Sigma111", "A3"},  {"Sigma1111", "A4"},
      {"Phi20", "I22"},   {"Phi21", "III23"},    {"Sigma[a,b]", "SigmaAB"}};
  for (const auto& [a, t] : aliases)
    if (a == name) return t;
  return name;
}

inline void require_params(const std::string& name, const std::vector<int>& params, std::size_t n) {
  if (params.size() != n)
    throw CatalogError(name + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s") + ", got " +
                       std::to_string(params.size()));
}

inline CatalogEntry with_formula(CatalogEntry base, const std::string& name, std::vector<int> params, int mu, long d,
                                 CatalogVariant formula, const std::string& notes) {
  base.name = name;
  base.params = std::move(params);
  base.mu = mu;
  base.d = d;
  if (std::find(base.variants.begin(), base.variants.end(), formula) == base.variants.end())
    base.variants.push_back(std::move(formula));
  base.notes = base.notes.empty() ? notes : base.notes + "; " + notes;
  return base;
}

inline CatalogEntry family_entry(const std::string& name, const std::vector<int>& p) {
  constexpr int kMaxMu = 16;
  if (name == "Sigma") {
    require_params(name, p, 1);
    const int r = p[0];
    if (r < 1 || r > kMaxMu) throw CatalogError("Sigma^r needs 1 <= r <= " + std::to_string(kMaxMu));
    CatalogEntry base;
    static const char* fixed[] = {"", "A1", "Sigma2", "Sigma3", "Sigma4"};
    if (r <= 4) base = *find_fixed(fixed[r]);
    return with_formula(std::move(base), name, p, r, static_cast<long>(r) * (r - 1), variant({r}, 0),
                        "family Sigma^r: K_r");
  }
  if (name == "Phi") {
    require_params(name, p, 2);
    const int m = p[0], r = p[1];
    if (m < 1 || r < 0 || r > m - 1) throw CatalogError("Phi_{m,r} needs 0 <= r <= m-1");
    if (m + 1 > kMaxMu) throw CatalogError("Phi_{m,r} needs m+1 <= " + std::to_string(kMaxMu));
    CatalogEntry base;
    if (m == 2) base = *find_fixed(r == 0 ? "I22" : "III23");
    if (m == 3) base = *find_fixed("Phi3" + std::to_string(r));
    const long d = static_cast<long>(binomial(m, 2) + binomial(r + 1, 2));
    const long c = static_cast<long>(binomial(m - r + 1, 2));
    return with_formula(std::move(base), name, p, m + 1, d, variant({0, m - r, r, 1}, c),
                        "family Phi_{m,r}: K_{0,m-r,r,1}");
  }
  if (name == "SigmaAB") {
    require_params(name, p, 2);
    const int a = p[0], b = p[1];
    if (b < 1 || b > a) throw CatalogError("Sigma^{a,b} needs 1 <= b <= a");
    const long mu = static_cast<long>(a) * (b + 1) - static_cast<long>(binomial(b, 2));
    if (mu > kMaxMu) throw CatalogError("Sigma^{a,b} has mu = " + std::to_string(mu) + " > " + std::to_string(kMaxMu));
    const long d = (a - 1) * mu - static_cast<long>(a - b) * b;
    const long t = static_cast<long>(binomial(b + 1, 2));
    const long c = t * t + static_cast<long>(b) * (a - b) * (static_cast<long>(b) * (a - b) + t);
    CatalogEntry base;
    if (a == 1 && b == 1) base = *find_fixed("A2");
    if (a == 2 && b == 1) base = *find_fixed("Sigma21");
    return with_formula(std::move(base), name, p, static_cast<int>(mu), d,
                        variant({0, b, a - b, static_cast<int>(t), b * (a - b)}, c),
                        "family Sigma^{a,b}: K_{0,b,a-b,C(b+1,2),b(a-b)}");
  }
  throw CatalogError("unknown catalog entry '" + name + "'");
}

}  // namespace detail

/// Entry by name. Families (Sigma r, Phi m r, SigmaAB a b) return the tabulated rows
/// they coincide with, if any, followed by the family formula.
inline CatalogEntry get_entry(const std::string& name, const std::vector<int>& params = {}) {
  const std::string target = detail::alias_target(name);
  if (const auto* e = detail::find_fixed(target)) {
    if (!params.empty()) throw CatalogError(target + " takes no parameters");
    return *e;
  }
  return detail::family_entry(target, params);
}

/// Generating functions (K-form) of all variants.
inline std::vector<RationalGF> get(const std::string& name, const std::vector<int>& params = {}) {
  std::vector<RationalGF> out;
  for (const auto& v : get_entry(name, params).variants) out.push_back(v.k_form());
  return out;
}

inline std::vector<CatalogListing> list_entries() {
  std::vector<CatalogListing> out;
  for (const auto& e : detail::fixed_table())
    out.push_back({e.name, "", std::to_string(e.mu), std::to_string(e.d), e.variants.size()});
  out.push_back({"Sigma", "r", "r", "r(r-1)", 1});
  out.push_back({"Phi", "m r", "m+1", "C(m,2)+C(r+1,2)", 1});
  out.push_back({"SigmaAB", "a b", "a(b+1)-C(b,2)", "(a-1)mu-(a-b)b", 1});
  return out;
}

inline nlohmann::ordered_json export_record(const CatalogEntry& e, const CatalogVariant& v) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  j["params"] = e.params;
  j["dimvec"] = v.dimvec.entries();
  j["factor"] = v.factor;
  j["scalar"] = to_string(v.scalar);
  j["mu"] = e.mu;
  j["d"] = e.d;
  j["c"] = v.c;
  return j;
}

/// One JSON object per variant and line, fixed field order, for every tabulated entry.
inline void export_catalog(std::ostream& os) {
  for (const auto& e : detail::fixed_table())
    for (const auto& v : e.variants) os << export_record(e, v).dump() << '\n';
}

}  // namespace thomgen
