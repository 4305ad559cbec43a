#include <algorithm>

#include <gtest/gtest.h>

#include <thomgen/assoc.hpp>
#include <thomgen/catalog.hpp>

using namespace thomgen;

namespace {

std::vector<std::vector<long>> sorted_keys(const std::vector<LinForm>& v) {
  std::vector<std::vector<long>> k;
  for (const auto& f : v) k.push_back(f.coeffs());
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

TEST(Coordinates, OrderAndWeights) {
  auto c = coordinates({2, 1});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].str(), "q_{1,1}^3");
  EXPECT_EQ(c[1].str(), "q_{1,2}^3");
  EXPECT_EQ(c[2].str(), "q_{2,2}^3");
  EXPECT_EQ(c[1].multidegree.str(), "t3 - t1 - t2");
  EXPECT_TRUE(coordinates({3}).empty());
}

TEST(Coordinates, CountsForAllOnes) {
  // Independent count: pairs i <= j with i + j <= k over k = 1..mu.
  for (int mu = 1; mu <= 8; ++mu) {
    std::size_t want = 0;
    for (int k = 1; k <= mu; ++k)
      for (int i = 1; i <= k; ++i)
        for (int j = i; i + j <= k; ++j) ++want;
    EXPECT_EQ(coordinates(DimensionVector(std::vector<int>(mu, 1))).size(), want);
  }
}

TEST(EulerClass, MatchesKDenominatorOnCatalog) {
  for (const auto& e : thomgen::detail::fixed_table())
    for (const auto& v : e.variants)
      EXPECT_EQ(sorted_keys(euler_class(v.dimvec)), sorted_keys(k_denominator(v.dimvec))) << e.name;
}

TEST(AssocEquations, A4HasOneEquation) {
  const DimensionVector d{1, 1, 1, 1};
  auto eqs = assoc_equations(d);
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_EQ(eqs[0].multidegree.str(), "t4 - 2*t1 - t2");
  EXPECT_EQ(eqs[0].terms.size(), 2u);
}

TEST(AssocEquations, NoneWithoutThreeLevels) {
  EXPECT_TRUE(assoc_equations({2, 1}).empty());
  EXPECT_TRUE(assoc_equations({1, 1, 1}).empty());
  EXPECT_TRUE(assoc_equations({3}).empty());
}

TEST(AssocEquations, EveryEquationIsHomogeneousOfItsWeight) {
  for (auto d : {DimensionVector{1, 1, 1, 1, 1}, DimensionVector{2, 1, 1}, DimensionVector{0, 1, 1, 1, 1, 1, 1}}) {
    const auto coords = coordinates(d);
    for (const auto& eq : assoc_equations(d)) {
      for (const auto& t : eq.terms) {
        std::vector<long> sum(coords[t.a].multidegree.coeffs());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += coords[t.b].multidegree[i];
        // q_{ij}^m q_{mk}^n has weight t_n - t_i - t_j - t_k, the same for every term.
        EXPECT_EQ(LinForm(sum), eq.multidegree);
      }
    }
  }
}

TEST(AssocEquations, Sigma221FactorsFromEquations) {
  const auto entry = get_entry("Sigma221");
  const auto& v = entry.variants[0];
  const auto eqs = assoc_equations(v.dimvec);
  ASSERT_EQ(eqs.size(), 3u);
  std::vector<LinForm> table;
  for (const auto& f : v.factors()) table.push_back(*LinForm::from_poly(f));
  EXPECT_EQ(sorted_keys(ci_multidegree_factors(eqs)), sorted_keys(table));
}

TEST(AssocEquations, Sigma211NeedsACoordinateHyperplane) {
  const auto entry = get_entry("Sigma211");
  const auto& v = entry.variants[0];
  const auto coords = coordinates(v.dimvec);
  const auto eqs = assoc_equations(v.dimvec);
  ASSERT_EQ(eqs.size(), 1u);
  auto q = std::find_if(coords.begin(), coords.end(), [](const QCoordinate& c) { return c.str() == "q_{2,2}^5"; });
  ASSERT_NE(q, coords.end());
  EXPECT_EQ(ci_multidegree(6, eqs, {*q}), parse_factor(v.factor, 6));
}

TEST(CiMultidegree, EmptyIsOne) {
  EXPECT_EQ(ci_multidegree(3, {}), LaurentPoly::constant(3, 1));
}

TEST(Render, EquationText) {
  const DimensionVector d{1, 1, 1, 1};
  const auto eqs = assoc_equations(d);
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_EQ(render(eqs[0], coordinates(d)), "q_{1,1}^2 q_{2,2}^4 - q_{1,3}^4 q_{1,2}^3");
}
