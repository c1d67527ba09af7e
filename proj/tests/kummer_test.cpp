#include <gtest/gtest.h>

#include "hrr/kummer/kummer.hpp"

using namespace hrr;

namespace {

using E = ChernPolynomial::Exponents;

Rational leading_sqrt_td(unsigned n) {
  return Rational(n + 1).pow(static_cast<int>(n + 1)) / (Rational(4).pow(static_cast<int>(n)) * factorial(n));
}

// td_eps rebuilt from the classical Todd series and a Chebyshev recurrence
// in e with e^2 = lambda/4 + 1, sharing no code with todd_deformed beyond
// the Chern ring itself.
LambdaSeries deformed_todd_oracle(unsigned n) {
  const SymFuncContext ctx(n);
  const std::size_t order = 2 * n + 1;
  const PowerSeries den = (PowerSeries::one(order + 1) - PowerSeries::exp_linear(Rational(-1), order + 1)).shift_down();
  const PowerSeries todd =
      PowerSeries::one(order) / PowerSeries(order, std::vector<Rational>(den.coeffs().begin(), den.coeffs().end()));
  const ChernPolynomial log_td = log(genus_from_series(todd, ctx));
  // T_m = even[m] + odd[m] * e with even, odd polynomials in lambda.
  const Polynomial1 e2("lambda", {Rational(1), Rational(1, 4)});
  const Polynomial1 two = Polynomial1::constant("lambda", Rational(2));
  std::vector<Polynomial1> even(order + 1, Polynomial1("lambda")), odd(order + 1, Polynomial1("lambda"));
  even[0] = Polynomial1::constant("lambda", Rational(1));
  odd[1] = Polynomial1::constant("lambda", Rational(1));
  for (std::size_t m = 1; m + 1 < order; ++m) {
    even[m + 1] = two * odd[m] * e2 - even[m - 1];
    odd[m + 1] = two * even[m] - odd[m - 1];
  }
  LambdaSeries x("lambda", n);
  for (unsigned k = 1; k <= n; ++k) {
    EXPECT_TRUE(odd[2 * k].is_zero());
    const ChernPolynomial t = log_td.weight_part(2 * k);
    for (int j = 0; j <= even[2 * k].degree(); ++j)
      x.add(static_cast<unsigned>(j), even[2 * k].coeff(static_cast<unsigned>(j)) * t);
  }
  return exp(x);
}

}  // namespace

TEST(Kummer, EulerQExamples) {
  EXPECT_EQ(kummer_euler_q(1, Rational(2)), Rational(4));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(kummer_euler_q(n, Rational(0)), Rational(n + 1));
  EXPECT_EQ(kummer_euler_q(5, Rational(4)), Rational(126));
}

TEST(Kummer, EulerLambda) {
  EXPECT_EQ(kummer_euler_lambda(1), Polynomial1("lambda", {Rational(2), Rational(1)}));
  for (unsigned n = 1; n <= 6; ++n) {
    const Polynomial1 p = kummer_euler_lambda(n);
    EXPECT_EQ(p.degree(), static_cast<int>(n));
    EXPECT_EQ(p.coeff(0), Rational(n + 1));
    EXPECT_EQ(p.leading(), leading_sqrt_td(n));
    // lambda = 2q/(n+1) turns it into the q form.
    for (long q = 0; q <= 8; q += 2)
      EXPECT_EQ(p.eval(Rational(2 * q, static_cast<long>(n + 1))), kummer_euler_q(n, Rational(q)));
  }
}

TEST(Kummer, ChiY) {
  EXPECT_EQ(chi_y_kummer(1), Polynomial1("y", {Rational(2), Rational(-20), Rational(2)}));
  EXPECT_EQ(chi_y_kummer(1).eval(Rational(-1)), Rational(24));
  for (unsigned n = 1; n <= 6; ++n) {
    const Polynomial1 chi = chi_y_kummer(n);
    EXPECT_EQ(chi.eval(Rational(0)), Rational(n + 1));
    EXPECT_EQ(chi.degree(), static_cast<int>(2 * n));
    EXPECT_TRUE(chi.is_palindromic(2 * n));
  }
  EXPECT_THROW(chi_y_kummer(0), std::out_of_range);
}

TEST(Kummer, SymmetricPower) {
  EXPECT_EQ(chi_symmetric_power(Rational(1), 3), Rational(1));
  EXPECT_EQ(chi_symmetric_power(Rational(4), 2), Rational(10));
  EXPECT_EQ(chi_symmetric_power(Rational(0), 2), Rational(0));
  // Polynomial extension: binom(-1 + 1, 2) = 0 and binom(-2 + 1, 2) = 1.
  EXPECT_EQ(chi_symmetric_power(Rational(-1), 2), Rational(0));
  EXPECT_EQ(chi_symmetric_power(Rational(-2), 2), Rational(1));
}

TEST(Kummer, DeformedToddMatchesIndependentRoute) {
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(todd_deformed(SymFuncContext(n)), deformed_todd_oracle(n)) << n;
}

TEST(Kummer, RelationRowsExamples) {
  const RelationSystem s1 = build_relations(1);
  ASSERT_EQ(s1.unknowns.size(), 1u);
  EXPECT_EQ(s1.rows[0].coeffs[0], Rational(1, 12));
  EXPECT_EQ(s1.rows[0].rhs, Rational(2));
  for (unsigned n = 1; n <= 6; ++n) {
    const RelationSystem s = build_relations(n);
    EXPECT_EQ(s.rows.size(), 2 * (n + 1));
    EXPECT_EQ(s.rows[0].label(), "lambda^0");
    EXPECT_EQ(s.rows[0].rhs, Rational(n + 1));
    EXPECT_EQ(s.rows[n].rhs, leading_sqrt_td(n));
    EXPECT_EQ(s.rows[n + 1].label(), "y^0");
  }
  EXPECT_THROW(build_relations(0), std::out_of_range);
  EXPECT_THROW(build_relations(7), std::out_of_range);
}

TEST(Kummer, SmallTables) {
  const ChernNumberTable t1 = solve_chern_numbers(1);
  ASSERT_TRUE(t1.unique());
  EXPECT_EQ(t1.values.at(E{1}), Rational(24));

  const ChernNumberTable t2 = solve_chern_numbers(2);
  ASSERT_TRUE(t2.unique());
  EXPECT_EQ(t2.values.at(E{2, 0}), Rational(756));
  EXPECT_EQ(t2.values.at(E{0, 1}), Rational(108));
  // Independent check: the weight-4 Todd class is (3 c2^2 - c4)/720 and
  // integrates to 3.
  EXPECT_EQ(Rational(3) * t2.values.at(E{2, 0}) - t2.values.at(E{0, 1}), Rational(2160));
}

TEST(Kummer, FiveDimensionalTable) {
  const ChernNumberTable t = solve_chern_numbers(5);
  ASSERT_TRUE(t.unique());
  EXPECT_EQ(t.rank, 7u);
  const std::map<std::string, long> expected = {
      {"c2^5", 84478464}, {"c2^3*c4", 26220672}, {"c2^2*c6", 3141504}, {"c2*c8", 142560},
      {"c2*c4^2", 8141472}, {"c4*c6", 979776},    {"c10", 2592}};
  ASSERT_EQ(t.values.size(), expected.size());
  for (const auto& [name, value] : expected) EXPECT_EQ(t.values.at(parse_monomial(5, name)), Rational(value)) << name;
}

TEST(Kummer, TablesSatisfyEveryRelation) {
  for (unsigned n = 1; n <= 5; ++n) {
    const ChernNumberTable t = solve_chern_numbers(n);
    ASSERT_TRUE(t.unique()) << n;
    const RelationSystem s = build_relations(n);
    for (const auto& [e, v] : t.values) {
      EXPECT_TRUE(v.is_integer());
      EXPECT_GT(v.sign(), 0);
    }
    for (const auto& row : s.rows) EXPECT_TRUE(s.residual(row, t.values).is_zero()) << n << " " << row.label();
  }
}

TEST(Kummer, RiemannRochForPowers) {
  // integral td_eps at lambda = m^2 lambda0 equals chi(L^m), as polynomials
  // in lambda0, for m = 0..3.
  for (unsigned n = 1; n <= 5; ++n) {
    const ChernNumberTable t = solve_chern_numbers(n);
    const Polynomial1 lhs = integrate(todd_deformed(SymFuncContext(n)), t.values);
    const Polynomial1 rhs = kummer_euler_lambda(n);
    for (long m = 0; m <= 3; ++m) {
      const Polynomial1 scale("lambda", {Rational(0), Rational(m * m)});
      EXPECT_EQ(lhs.compose(scale), rhs.compose(scale)) << n << " " << m;
    }
  }
}

TEST(Kummer, IntegralIdentities) {
  for (unsigned n = 1; n <= 5; ++n) {
    const ChernNumberTable t = solve_chern_numbers(n);
    const SymFuncContext ctx(n);
    EXPECT_EQ(integrate(todd_symplectic(ctx), t.values), Rational(n + 1));
    EXPECT_EQ(integrate(sqrt_todd(ctx), t.values), leading_sqrt_td(n));
    EXPECT_EQ(integrate(chi_y_integrand(ctx), t.values), chi_y_kummer(n));
  }
}

TEST(Kummer, SixIsUnderdetermined) {
  const ChernNumberTable t = solve_chern_numbers(6);
  EXPECT_EQ(t.unknowns, 11u);
  EXPECT_EQ(t.kind, SolveKind::Family);
  EXPECT_LT(t.rank, t.unknowns);
  EXPECT_TRUE(t.values.empty());
}

TEST(Kummer, LambdaRowsForTwoFromPrintedExpansion) {
  // The lambda^0 and lambda^1 rows at n = 2 are (3, -1)/720 and (7/2, -2)/720
  // on (c2^2, c4): independent, so lambda rows alone have rank 2 here.
  const RelationSystem s = build_relations(2);
  ASSERT_EQ(s.unknowns, (std::vector<E>{{2, 0}, {0, 1}}));
  EXPECT_EQ(s.rows[0].coeffs, (std::vector<Rational>{Rational(3, 720), Rational(-1, 720)}));
  EXPECT_EQ(s.rows[1].coeffs, (std::vector<Rational>{Rational(7, 2 * 720), Rational(-2, 720)}));
  EXPECT_EQ(s.rows[2].coeffs, (std::vector<Rational>{Rational(7, 8 * 720), Rational(-1, 2 * 720)}));
}
