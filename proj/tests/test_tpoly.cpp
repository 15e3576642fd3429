#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "qtchar/error.hpp"
#include "tbinomial_oracle.hpp"

using namespace qtchar;
using qtchar::testing::Gen;
using qtchar::testing::T;

TEST(TPoly, Canonical) {
  EXPECT_TRUE(TPoly{}.is_zero());
  EXPECT_TRUE((T(1) - T(1)).is_zero());
  EXPECT_EQ(T(3, 0), TPoly{});
  EXPECT_EQ((T(-2) + T(5) - T(5)).max_exponent(), -2);
  EXPECT_EQ(TPoly::from_terms({{-1, 1}, {0, 0}, {1, 1}}), T(-1) + T(1));
}

TEST(TPoly, ToString) {
  EXPECT_EQ(TPoly{}.to_string(), "0");
  EXPECT_EQ((T(2) + 1 + T(-2)).to_string(), "t^2 + 1 + t^-2");
  EXPECT_EQ(T(1, -3).to_string(), "-3t");
  EXPECT_EQ((T(-1) - T(1)).to_string(), "-t + t^-1");
}

TEST(TPoly, Bar) {
  EXPECT_EQ(bar(T(-1)), T(1));
  EXPECT_EQ(bar(1 + T(2)), 1 + T(-2));
  EXPECT_EQ(bar(T(1) + T(-1)), T(1) + T(-1));
}

TEST(TPoly, TBinomial) {
  EXPECT_EQ(t_binomial(2, 1), T(1) + T(-1));
  EXPECT_EQ(t_binomial(7, 0), TPoly(1));
  EXPECT_EQ(t_binomial(4, 2), T(4) + T(2) + 2 + T(-2) + T(-4));
  EXPECT_EQ(t_binomial(3, -1), TPoly{});
  EXPECT_EQ(t_binomial(3, 4), TPoly{});
}

TEST(TPoly, StringWeight) {
  EXPECT_EQ(string_weight(1, 1), TPoly(1));
  EXPECT_EQ(string_weight(2, 1), T(2) + 1);
  EXPECT_EQ(string_weight(3, 1), T(4) + T(2) + 1);
  EXPECT_THROW(string_weight(2, 3), InvalidInput);
  EXPECT_THROW(string_weight(2, -1), InvalidInput);
  for (int n = 0; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) EXPECT_EQ(string_weight(n, r).min_exponent(), 0);
  }
}

TEST(TPoly, NegativePart) {
  EXPECT_EQ(negative_part(T(-1) - T(1)), T(-1));
  EXPECT_EQ(negative_part(5), TPoly{});
  EXPECT_EQ(negative_part(T(-2) + 1 + T(3)), T(-2));
}

TEST(TPoly, QuantumInteger) {
  EXPECT_EQ(quantum_integer(0), TPoly{});
  EXPECT_EQ(quantum_integer(1), TPoly(1));
  EXPECT_EQ(quantum_integer(3), T(2) + 1 + T(-2));
}

TEST(TPolyProperty, BinomialMatchesProductOracle) {
  for (int n = 0; n <= 14; ++n) {
    for (int r = -1; r <= n + 1; ++r) EXPECT_EQ(t_binomial(n, r), oracle::t_binomial_product(n, r)) << n << " " << r;
  }
}

TEST(TPolyProperty, BinomialSymmetricBarInvariantPascal) {
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      const TPoly b = t_binomial(n, r);
      EXPECT_EQ(b, t_binomial(n, n - r));
      EXPECT_EQ(bar(b), b);
      if (n > 0) EXPECT_EQ(b, T(r) * t_binomial(n - 1, r) + T(r - n) * t_binomial(n - 1, r - 1)) << n << " " << r;
      std::int64_t binom = 1;
      for (int i = 1; i <= r; ++i) binom = binom * (n - r + i) / i;
      EXPECT_EQ(b.eval_at_one(), binom);
    }
  }
}

TEST(TPolyProperty, RingAxiomsAndBarIsRingInvolution) {
  Gen g(17);
  for (int i = 0; i < 300; ++i) {
    const TPoly a = g.poly(), b = g.poly(), c = g.poly();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, TPoly{});
    EXPECT_EQ(a * TPoly(1), a);
    EXPECT_EQ(bar(bar(a)), a);
    EXPECT_EQ(bar(a * b), bar(a) * bar(b));
    EXPECT_EQ(bar(a + b), bar(a) + bar(b));
    EXPECT_EQ((a * b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
  }
}

TEST(TPolyProperty, NegativePartSplit) {
  Gen g(5);
  for (int i = 0; i < 300; ++i) {
    const TPoly p = g.poly(6, 6);
    const TPoly neg = negative_part(p);
    EXPECT_EQ(neg + (p - neg), p);
    if (!neg.is_zero()) EXPECT_LT(neg.max_exponent(), 0);
    if (!(p - neg).is_zero()) EXPECT_GE((p - neg).min_exponent(), 0);
  }
}

TEST(TPoly, OverflowIsDetected) {
  const TPoly big = TPoly(std::numeric_limits<TPoly::Coeff>::max());
  EXPECT_THROW(big + big, std::overflow_error);
  EXPECT_THROW(big * T(0, 2), std::overflow_error);
}
