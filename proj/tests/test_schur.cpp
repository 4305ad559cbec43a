#include <gtest/gtest.h>

#include <thomgen/catalog.hpp>
#include <thomgen/schur.hpp>

#include "oracle.hpp"

using namespace thomgen;

TEST(Straighten, PartitionsAreFixed) {
  auto s = straighten({{5, 5, 3}});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sign, 1);
  EXPECT_EQ(s->partition, (Partition{5, 5, 3}));
  s = straighten({{2, 0, 0}});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->partition, (Partition{2}));
}

TEST(Straighten, SwapRule) {
  // Delta_{a,b} = -Delta_{b-1,a+1}.
  auto s = straighten({{1, 3}});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sign, -1);
  EXPECT_EQ(s->partition, (Partition{2, 2}));
  EXPECT_FALSE(straighten({{1, 2}}));  // equal keys
}

TEST(Straighten, ExhaustiveAgainstDeterminantForThreeRows) {
  int nonzero = 0;
  for (int a = -4; a <= 6; ++a)
    for (int b = -4; b <= 6; ++b)
      for (int c = -4; c <= 6; ++c) {
        const std::vector<int> seq{a, b, c};
        const auto det = oracle::naive_delta(seq, 0, 3);
        const auto s = straighten({seq});
        if (!s) {
          EXPECT_TRUE(det.is_zero()) << a << "," << b << "," << c;
          continue;
        }
        ++nonzero;
        ChernPolynomial want(0, 3, det.codim());
        add_delta(want, s->partition, s->sign);
        EXPECT_EQ(det, want) << a << "," << b << "," << c;
      }
  EXPECT_GT(nonzero, 100);
}

TEST(Straighten, RandomFourRowSequences) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> part(-5, 6);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> seq(4);
    for (auto& x : seq) x = part(rng);
    const auto det = oracle::naive_delta(seq, 0, 4);
    const auto s = straighten({seq});
    if (!s) {
      EXPECT_TRUE(det.is_zero());
      continue;
    }
    ChernPolynomial want(0, 4, det.codim());
    add_delta(want, s->partition, s->sign);
    EXPECT_EQ(det, want);
  }
}

TEST(JacobiTrudi, MatchesPermutationExpansion) {
  for (const Partition& p : {Partition{3, 2, 2}, Partition{4, 1}, Partition{2, 2, 2, 1}, Partition{5}}) {
    const int mu = static_cast<int>(p.size());
    EXPECT_EQ(delta_to_chern(p, 0, mu), oracle::naive_delta(p, 0, mu));
  }
}

TEST(SchurExpansion, AddTermValidates) {
  SchurExpansion se(0, 3, 6);
  EXPECT_THROW(se.add_term({2, 3, 1}, 1), std::invalid_argument);
  EXPECT_THROW(se.add_term({4, 3}, 1), std::logic_error);
  EXPECT_THROW(se.add_term({2, 2, 1, 1}, 1), std::invalid_argument);
  se.add_term({3, 2, 1, 0, 0}, 1);  // trailing zeros are dropped
  EXPECT_EQ(se.coefficient({3, 2, 1}), 1);
}

TEST(SchurExpansion, Render) {
  SchurExpansion se(1, 3, 8);
  se.add_term({3, 3, 2}, 2);
  se.add_term({5, 3}, 8);
  EXPECT_EQ(render(se), "2 Δ_{3,3,2} + 8 Δ_{5,3}");
  EXPECT_EQ(render(se, RenderStyle::symbolic_ell), "2 Δ_{l+2,l+2,l+1} + 8 Δ_{l+4,l+2,l-1}");
}

TEST(SchurExpansion, PorteousSmall) {
  for (int mu = 1; mu <= 3; ++mu)
    for (int ell = 0; ell <= 2; ++ell) {
      auto se = schur_expansion(ktilde_function(DimensionVector({mu})), ell);
      ASSERT_EQ(se.size(), 1u);
      EXPECT_EQ(se.coefficient(Partition(static_cast<std::size_t>(mu), ell + mu)), 1);
    }
}

TEST(SchurExpansion, AgreesWithChernBasisAcrossCatalog) {
  for (const char* name : {"A2", "A3", "I22", "III23", "I23", "III33", "Phi30", "Phi31", "Phi32", "Sigma21"}) {
    for (const auto& v : get_entry(name).variants)
      for (int ell = 0; ell <= 1; ++ell)
        EXPECT_EQ(schur_to_chern(schur_expansion(v.ktilde_form(), ell)), thom_polynomial(v.k_form(), ell))
            << name << " " << v.dimvec.str() << " ell=" << ell;
  }
}

TEST(SchurExpansion, WideBoxIsNeeded) {
  // K~_{1,1,1} at ell = 0 has the term 4 t1^2 t2^-2, below the Thom box in t2.
  // Its Delta_{3,-1,1} straightens to -Delta_{3}, so the Schur expansion must see it.
  const auto gf = ktilde_function({1, 1, 1});
  const ExponentVector e{2, -2, 0};
  EXPECT_EQ(expand_in_box(gf, ExpansionBox::for_thom(3, 0, 0)).coefficient(e), 0);
  EXPECT_EQ(expand_in_box(gf, ExpansionBox::for_schur(3, 0, 0)).coefficient(e), 4);
  auto s = straighten({{3, -1, 1}});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sign, -1);
  EXPECT_EQ(s->partition, (Partition{3}));
  EXPECT_EQ(schur_to_chern(schur_expansion(gf, 0)), thom_polynomial(k_function({1, 1, 1}), 0));
}
