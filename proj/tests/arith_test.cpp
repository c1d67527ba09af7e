#include <random>

#include <gtest/gtest.h>

#include "hrr/arith/polynomial.hpp"
#include "hrr/arith/power_series.hpp"
#include "hrr/arith/qmatrix.hpp"
#include "hrr/arith/rational.hpp"
#include "hrr/arith/sequences.hpp"

namespace hrr {
namespace {

// Oracle: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1.
std::vector<Rational> bernoulli_by_recurrence(unsigned count) {
  std::vector<Rational> b(count);
  b[0] = 1;
  for (unsigned m = 1; m < count; ++m) {
    Rational acc;
    for (unsigned j = 0; j < m; ++j) acc += binomial(Rational(m + 1), j) * b[j];
    b[m] = -acc / Rational(m + 1);
  }
  return b;
}

TEST(Rational, LowestTermsAndFormatting) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(2592).str(), "2592");
  EXPECT_EQ(Rational(1, 48).str(), "1/48");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("84478464"), Rational(84478464));
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(Rational(5), 2), Rational(10));
  EXPECT_EQ(binomial(Rational(1), 2), Rational(0));
  EXPECT_EQ(binomial(Rational(-1), 3), Rational(-1));
  EXPECT_EQ(binomial(Rational(1, 2), 2), Rational(-1, 8));
}

TEST(Bernoulli, ListedValues) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), Rational(0));
}

TEST(Bernoulli, AgreesWithRecurrenceOracle) {
  const auto oracle = bernoulli_by_recurrence(40);
  for (unsigned k = 0; k < 40; ++k) EXPECT_EQ(bernoulli(k), oracle[k]) << k;
  for (unsigned k = 3; k < 40; k += 2) EXPECT_TRUE(bernoulli(k).is_zero());
}

TEST(ModifiedBernoulli, ListedValues) {
  EXPECT_EQ(modified_bernoulli(0), Rational(0));
  EXPECT_EQ(modified_bernoulli(2), Rational(1, 48));
  EXPECT_EQ(modified_bernoulli(4), Rational(-1, 5760));
  EXPECT_THROW(modified_bernoulli(3), std::invalid_argument);
}

TEST(ModifiedBernoulli, MatchesClosedForm) {
  for (unsigned k = 1; k <= 15; ++k) {
    const Rational closed = bernoulli(2 * k) / (Rational(4 * k) * factorial(2 * k));
    EXPECT_EQ(modified_bernoulli(2 * k), closed) << 2 * k;
  }
}

TEST(Chebyshev, Recurrence) {
  EXPECT_EQ(chebyshev(0), Polynomial1("x", {1}));
  EXPECT_EQ(chebyshev(1), Polynomial1("x", {0, 1}));
  EXPECT_EQ(chebyshev(4), Polynomial1("x", {1, 0, -8, 0, 8}));
  for (unsigned n = 0; n < 16; ++n) EXPECT_EQ(chebyshev(n).is_even(), n % 2 == 0);
}

TEST(Chebyshev, EvenLambdaSubstitution) {
  EXPECT_EQ(chebyshev_even_lambda(0), Polynomial1("lambda", {1}));
  EXPECT_EQ(chebyshev_even_lambda(1), Polynomial1("lambda", {1, Rational(1, 2)}));
  EXPECT_EQ(chebyshev_even_lambda(2), Polynomial1("lambda", {1, 2, Rational(1, 2)}));
  // T_{2k}(1) = 1 at lambda = 0.
  for (unsigned k = 0; k < 8; ++k) EXPECT_EQ(chebyshev_even_lambda(k).eval(0), Rational(1));
}

// mu^n + mu^-n = 2 T_n(+-sqrt(z/4 + 1/2)) with z = mu^2 + mu^-2. For even n
// both sides are rational; for odd n compare squares.
TEST(Chebyshev, PowerSumIdentity) {
  for (const Rational mu : {Rational(2), Rational(3), Rational(1, 2)}) {
    const Rational z = mu * mu + (mu * mu).inverse();
    const Rational x2 = z / 4 + Rational(1, 2);
    for (unsigned n = 0; n <= 12; ++n) {
      const Rational lhs = mu.pow(n) + mu.pow(n).inverse();
      const Polynomial1 t = chebyshev(n);
      std::vector<Rational> even, odd;
      for (int i = 0; i <= t.degree(); ++i) (i % 2 ? odd : even).push_back(t.coeff(i));
      if (n % 2 == 0) {
        EXPECT_EQ(lhs, 2 * Polynomial1("x2", even).eval(x2)) << n;
      } else {
        const Rational r = Polynomial1("x2", odd).eval(x2);
        EXPECT_EQ(lhs * lhs, 4 * x2 * r * r) << n;
      }
    }
  }
}

TEST(PowerSeries, ExpLogRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    PowerSeries s(12);
    s.at(0) = 1;
    for (std::size_t k = 1; k < 12; ++k) s.at(k) = Rational(d(rng), 1 + std::abs(d(rng)));
    EXPECT_EQ(s.log().exp(), s);
    PowerSeries z = s;
    z.at(0) = 0;
    EXPECT_EQ(z.exp().log(), z);
  }
}

TEST(PowerSeries, PreconditionsAreEnforced) {
  PowerSeries s = PowerSeries::one(5);
  EXPECT_THROW(s.exp(), std::domain_error);
  EXPECT_THROW(PowerSeries::x(5).log(), std::domain_error);
  EXPECT_THROW(PowerSeries::x(5).inverse(), std::domain_error);
}

TEST(PowerSeries, CompositionMatchesExpOfLinear) {
  // exp(2x) composed from exp(y) with y = 2x.
  PowerSeries e = PowerSeries::x(10).exp();
  PowerSeries two_x = PowerSeries::x(10) * Rational(2);
  PowerSeries expected = (PowerSeries::x(10) * Rational(2)).exp();
  e = PowerSeries(10);
  for (std::size_t k = 0; k < 10; ++k) e.at(k) = factorial(static_cast<unsigned>(k)).inverse();
  EXPECT_EQ(e.compose(two_x), expected);
  EXPECT_EQ(expected, PowerSeries::exp_linear(2, 10));
}

TEST(QMatrix, SolveExamples) {
  const auto unique = rref_solve(QMatrix::identity(2), {1, 2});
  EXPECT_EQ(unique.kind, SolveKind::Unique);
  EXPECT_EQ(unique.solution, (std::vector<Rational>{1, 2}));

  const auto bad = rref_solve(QMatrix(1, 2), {1});
  EXPECT_EQ(bad.kind, SolveKind::Inconsistent);

  const QMatrix a({{1, 1}, {2, 2}});
  const auto fam = rref_solve(a, {3, 6});
  EXPECT_EQ(fam.kind, SolveKind::Family);
  EXPECT_EQ(fam.rank, 1u);
  ASSERT_EQ(fam.nullspace.size(), 1u);
  EXPECT_EQ(a * fam.nullspace[0], (std::vector<Rational>{0, 0}));
  EXPECT_EQ(a * fam.solution, (std::vector<Rational>{3, 6}));

  EXPECT_THROW(rref_solve(a, {1}), std::invalid_argument);
}

TEST(QMatrix, RandomSystemsSatisfyEquations) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 7) % 5;
    QMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = Rational(d(rng), 1 + std::abs(d(rng)));
    std::vector<Rational> x(cols);
    for (auto& v : x) v = d(rng);
    const auto b = a * x;
    const auto res = rref_solve(a, b);
    ASSERT_NE(res.kind, SolveKind::Inconsistent);
    EXPECT_EQ(a * res.solution, b);
    for (const auto& v : res.nullspace) EXPECT_EQ(a * v, std::vector<Rational>(rows));
    const auto e = rref(a);
    EXPECT_EQ(e.rank(), res.rank);
    EXPECT_EQ(res.rank + res.nullspace.size(), cols);
  }
}

TEST(QMatrix, Determinant) {
  EXPECT_EQ(determinant(QMatrix({{0, 1}, {-1, 0}})), Rational(1));
  EXPECT_EQ(determinant(QMatrix({{1, 2}, {2, 4}})), Rational(0));
  EXPECT_EQ(determinant(QMatrix({{2, 0, 0}, {0, 3, 0}, {1, 1, Rational(1, 6)}})), Rational(1));
}

TEST(Polynomial1, ArithmeticAndPalindrome) {
  const Polynomial1 p("y", {2, -20, 2});
  EXPECT_TRUE(p.is_palindromic(2));
  EXPECT_EQ(p.eval(-1), Rational(24));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(Polynomial1("y").degree(), -1);
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(p.str(), "2*y^2 - 20*y + 2");
}

}  // namespace
}  // namespace hrr
