#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "generators.hpp"
#include "nearcube/cyclotomic.hpp"

using namespace nearcube;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  IntPoly out;
  for (long x : c) out.emplace_back(x);
  return out;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

unsigned long totient(unsigned long n) {
  unsigned long count = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    unsigned long a = k, b = n;
    while (b != 0) {
      const unsigned long t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

std::complex<double> direct(const std::vector<std::pair<long, Rational>>& terms) {
  std::complex<double> s{0, 0};
  for (const auto& [c, q] : terms) s += static_cast<double>(c) * std::polar(1.0, 2.0 * std::numbers::pi * q.to_double());
  return s;
}

}  // namespace

TEST(Cyclotomic, SmallIndices) {
  EXPECT_EQ(cyclotomic(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic(3), poly({1, 1, 1}));
  EXPECT_EQ(cyclotomic(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), poly({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic(15), poly({1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

TEST(Cyclotomic, Phi105HasCoefficientMinusTwo) {
  const auto& p = cyclotomic(105);
  ASSERT_EQ(p.size(), 49U);
  EXPECT_EQ(p[7], mpz_class(-2));
  EXPECT_EQ(p[41], mpz_class(-2));
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (unsigned long n = 1; n <= 40; ++n) {
    IntPoly prod = poly({1});
    for (unsigned long d = 1; d <= n; ++d) {
      if (n % d == 0) prod = multiply(prod, cyclotomic(d));
    }
    IntPoly expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    EXPECT_EQ(prod, expect) << "n = " << n;
    EXPECT_EQ(cyclotomic(n).size(), totient(n) + 1) << "n = " << n;
  }
}

TEST(PolyModMonic, Examples) {
  EXPECT_EQ(poly_mod_monic(poly({1, 1, 1, 1}), poly({1, 1, 1})), poly({1}));
  EXPECT_EQ(poly_mod_monic(poly({1, 2, 2, 1}), poly({1, 1, 1})), poly({}));
  EXPECT_EQ(poly_mod_monic(poly({0, 0, 1}), poly({1, 1})), poly({1}));
  EXPECT_EQ(poly_mod_monic(poly({3, 2}), poly({1, 0, 1})), poly({3, 2}));
}

TEST(ExpSum, MergesAndDropsTerms) {
  ExpSum s;
  s.add(2, Rational(1, 3));
  s.add(-2, Rational(1, 3));
  s.add(1, Rational(1, 4));
  s.add(1, Rational(1, 4));
  ASSERT_EQ(s.terms().size(), 1U);
  EXPECT_EQ(s.terms().at(Rational(1, 4)), mpz_class(2));
  EXPECT_EQ(s.order(), 4UL);
  EXPECT_EQ(ExpSum{}.order(), 1UL);
  EXPECT_TRUE(ExpSum{}.vanishes());
}

TEST(ExpSum, KnownVanishingSums) {
  ExpSum thirds;
  for (int k = 0; k < 3; ++k) thirds.add(1, Rational(k, 3));
  EXPECT_TRUE(thirds.vanishes());

  ExpSum half;
  half.add(1, 0);
  half.add(1, Rational(1, 2));
  EXPECT_TRUE(half.vanishes());

  // ζ6 + ζ6^5 = 1
  ExpSum six;
  six.add(1, Rational(1, 6));
  six.add(1, Rational(5, 6));
  six.add(-1, 0);
  EXPECT_TRUE(six.vanishes());

  ExpSum lone;
  lone.add(1, Rational(1, 5));
  EXPECT_FALSE(lone.vanishes());
}

TEST(ExpSum, AgreesWithDirectEvaluation) {
  gen::Source g(83);
  int zero_cases = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<std::pair<long, Rational>> terms;
    const long n = g.integer(1, 30);
    if (g.coin()) {
      // shifted full sum of d-th roots, multiplied by a random integer
      const long d = g.integer(2, 6);
      const Rational shift(g.integer(0, n - 1), n);
      const long c = g.integer(-3, 3);
      for (long k = 0; k < d; ++k) {
        terms.emplace_back(c, (shift + Rational(k, d)).frac());
      }
    }
    const long extra = g.integer(0, 3);
    for (long k = 0; k < extra; ++k) terms.emplace_back(g.integer(-2, 2), Rational(g.integer(0, n - 1), n));
    ExpSum s;
    for (const auto& [c, q] : terms) s.add(c, q);
    const auto value = direct(terms);
    EXPECT_NEAR(std::abs(s.evaluate() - value), 0.0, 1e-9);
    const bool numeric_zero = std::abs(value) < 1e-9;
    EXPECT_EQ(s.vanishes(), numeric_zero) << "case " << i;
    if (numeric_zero) ++zero_cases;
  }
  EXPECT_GT(zero_cases, 50);
}
