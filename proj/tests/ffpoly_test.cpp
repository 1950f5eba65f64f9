#include "ferrers/ffpoly.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ferrers/board.hpp"
#include "oracles.hpp"

namespace ferrers {
namespace {

TEST(MFallingFactorial, Values) {
  EXPECT_EQ(m_falling_factorial(1, 2, 2), -1);
  EXPECT_EQ(m_falling_factorial(1, 2, 5), 1 - 5);
  EXPECT_EQ(m_falling_factorial(1, 3, 2), 3);
  EXPECT_EQ(m_falling_factorial(17, 0, 3), 1);
  EXPECT_EQ(m_falling_factorial(-4, 0, 1), 1);
  EXPECT_THROW(m_falling_factorial(1, -1, 2), ValidationError);
}

TEST(MFallingFactorial, OneIsTheClassicalFallingFactorial) {
  for (int v = 0; v <= 8; ++v) {
    for (int k = 0; k <= 8; ++k) {
      Integer classical = 1;
      for (int i = 0; i < k; ++i) classical *= v - i;
      ASSERT_EQ(m_falling_factorial(v, k, 1), classical) << v << " " << k;
    }
  }
}

TEST(MFallingFactorial, LargeValuesStayExact) {
  // 1↓_{30,3} = prod_{i<30} (1 - 3i), far beyond 64 bits.
  Integer expected = 1;
  for (int i = 0; i < 30; ++i) expected *= Integer(1 - 3 * i);
  EXPECT_EQ(m_falling_factorial(1, 30, 3), expected);
  EXPECT_GT(abs(expected), Integer(std::numeric_limits<std::uint64_t>::max()));
}

TEST(FFPoly, CanonicalFormStripsTrailingZeros) {
  const FFPoly p(Basis::power(), {1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(FFPoly(Basis::power(), {0, 0}).is_zero());
  EXPECT_EQ(FFPoly(Basis::power(), {0}).degree(), -1);
}

TEST(FFPoly, MixingBasesIsAnError) {
  const FFPoly a(Basis::falling(2), {1, 1});
  const FFPoly b(Basis::falling(3), {1, 1});
  EXPECT_THROW(a + b, BasisMismatch);
  EXPECT_THROW(a + FFPoly(Basis::power(), {1}), BasisMismatch);
  EXPECT_NO_THROW(a + FFPoly(Basis::falling(2), {4}));
}

TEST(ExpandRoots, Examples) {
  EXPECT_EQ(expand_roots(RootMultiset{1, 0, 0, 1}), FFPoly(Basis::power(), {0, 0, 1, 2, 1}));
  EXPECT_EQ(expand_roots(RootMultiset{}), FFPoly(Basis::power(), {1}));
  EXPECT_EQ(expand_roots(RootMultiset{1, 0}), FFPoly(Basis::power(), {0, 1, 1}));
}

TEST(ExpandRoots, PolynomialVanishesAtNegatedRoots) {
  const RootMultiset roots{3, -2, 0, 7, 7};
  const FFPoly p = expand_roots(roots);
  for (auto c : roots.constants()) EXPECT_EQ(eval(p, Integer(-c)), 0);
}

TEST(ToBasis, Examples) {
  const FFPoly falling(Basis::falling(2), {0, 0, 1});
  EXPECT_EQ(to_basis(falling, Basis::power()), FFPoly(Basis::power(), {0, -2, 1}));

  const FFPoly zero(Basis::power());
  EXPECT_TRUE(to_basis(zero, Basis::falling(3)).is_zero());
  EXPECT_EQ(to_basis(zero, Basis::falling(3)).basis(), Basis::falling(3));

  const FFPoly p(Basis::power(), {1, 2, 3});
  EXPECT_EQ(to_basis(to_basis(p, Basis::falling(3)), Basis::power()), p);
}

TEST(ToBasis, FallingToFallingGoesThroughPower) {
  const FFPoly p(Basis::falling(2), {5, -1, 3, 2});
  const FFPoly q = to_basis(p, Basis::falling(3));
  for (int x = -6; x <= 6; ++x) EXPECT_EQ(eval(p, x), eval(q, x));
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(FFPoly(Basis::power(), {0, 0, 1, 2, 1}), 1), 4);
  EXPECT_EQ(eval(FFPoly::constant(1), 123), 1);
  EXPECT_EQ(eval(FFPoly(Basis::falling(2), {0, 0, 1}), 5), 15);  // 5 * 3
}

TEST(Display, RendersPowerBasis) {
  EXPECT_EQ(to_display_string(FFPoly(Basis::power(), {0, 0, 1, 2, 1})), "x^4 + 2x^3 + x^2");
  EXPECT_EQ(to_display_string(FFPoly(Basis::power(), {-24, 10, 23, -10, 1})),
            "x^4 - 10x^3 + 23x^2 + 10x - 24");
  EXPECT_EQ(to_display_string(FFPoly(Basis::power())), "0");
}

TEST(FFPolyProperty, BasisConversionIsExactBijection) {
  std::mt19937 rng(20061);
  std::uniform_int_distribution<int> coeff(-50, 50);
  std::uniform_int_distribution<int> degree(0, 8);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Integer> coeffs(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& c : coeffs) c = coeff(rng);
    for (int m = 1; m <= 3; ++m) {
      const FFPoly power(Basis::power(), coeffs);
      const FFPoly falling = to_basis(power, Basis::falling(m));
      ASSERT_EQ(to_basis(falling, Basis::power()), power);
      // Read the same coefficients as a falling-basis polynomial too.
      const FFPoly as_falling(Basis::falling(m), coeffs);
      ASSERT_EQ(to_basis(to_basis(as_falling, Basis::power()), Basis::falling(m)), as_falling);
      for (int x = -10; x <= 10; ++x) {
        ASSERT_EQ(eval(power, x), eval(falling, x));
        ASSERT_EQ(eval(power, x), oracle::power_poly_at(power.coeffs(), x));
      }
    }
  }
}

TEST(FFPolyProperty, ExpansionMatchesSubsetOracleAndIgnoresOrder) {
  std::mt19937 rng(1975);
  std::uniform_int_distribution<int> constant(-9, 9);
  std::uniform_int_distribution<int> size(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> c(static_cast<std::size_t>(size(rng)));
    for (auto& v : c) v = constant(rng);
    const FFPoly expected(Basis::power(), oracle::expand_by_subsets(c));
    ASSERT_EQ(expand_roots(RootMultiset(std::vector<std::int64_t>(c.begin(), c.end()))), expected);
    std::shuffle(c.begin(), c.end(), rng);
    ASSERT_EQ(expand_roots(RootMultiset(std::vector<std::int64_t>(c.begin(), c.end()))), expected);
  }
}

}  // namespace
}  // namespace ferrers
