#include <random>

#include <gtest/gtest.h>

#include "hrr/multilinear/exterior.hpp"

namespace hrr::multilinear {
namespace {

using E = ExteriorElement;

std::vector<E::Mask> masks_of_degree(unsigned dim, unsigned degree) {
  std::vector<E::Mask> out;
  for (E::Mask m = 0; m < (E::Mask{1} << dim); ++m)
    if (static_cast<unsigned>(__builtin_popcount(m)) == degree) out.push_back(m);
  return out;
}

E from_mask(SymplecticSpace s, E::Mask m) {
  E e(s);
  e.add_term(m, 1);
  return e;
}

TEST(Wedge, BasicSigns) {
  const SymplecticSpace v(2);
  const E t1 = E::basis(v, 1), t2 = E::basis(v, 2);
  E expected(v);
  expected.add_term(0b11, 1);
  EXPECT_EQ(wedge(t1, t2), expected);
  EXPECT_TRUE(wedge(t1, t1).is_zero());
  EXPECT_EQ(wedge(t2, t1), expected * Rational(-1));
}

TEST(Wedge, AmbientMismatchRejected) {
  EXPECT_THROW(wedge(E::basis(SymplecticSpace(1), 1), E::basis(SymplecticSpace(2), 1)),
               std::invalid_argument);
  EXPECT_THROW(pairing(E::basis(SymplecticSpace(1), 1), E::basis(SymplecticSpace(2), 1)),
               std::invalid_argument);
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  const SymplecticSpace v(2);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto random_element = [&] {
    E e(v);
    for (E::Mask m = 0; m < 16; ++m) e.add_term(m, coef(rng));
    return e;
  };
  for (int i = 0; i < 10; ++i) {
    const E a = random_element(), b = random_element(), c = random_element();
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    for (unsigned p = 0; p <= 4; ++p)
      for (unsigned q = 0; q <= 4; ++q) {
        const E ap = a.homogeneous(p), bq = b.homogeneous(q);
        EXPECT_EQ(wedge(ap, bq), wedge(bq, ap) * Rational((p * q) % 2 ? -1 : 1));
      }
  }
}

TEST(Pairing, Examples) {
  for (unsigned n = 1; n <= 4; ++n) {
    const SymplecticSpace v(n);
    const E sn = power(E::sigma(v), n);
    EXPECT_EQ(pairing(sn, sn), factorial(n) * factorial(n)) << n;
    EXPECT_EQ(top_projection(sn), factorial(n)) << n;
    EXPECT_EQ(top_projection(E::scalar(v, 1)), Rational(0));
  }
  const SymplecticSpace v(1);
  EXPECT_EQ(pairing(E::basis(v, 1), E::basis(v, 1)), Rational(0));
  EXPECT_EQ(pairing(E::basis(v, 1), E::basis(v, 2)), Rational(1));
  EXPECT_EQ(top_projection(E::monomial(v, {1, 2})), Rational(1));
}

TEST(Pairing, SymmetricOnEvenDegreesZeroAcrossDegrees) {
  for (unsigned n = 1; n <= 3; ++n) {
    const SymplecticSpace v(n);
    for (unsigned r = 0; r <= 2 * n; ++r)
      for (unsigned s = 0; s <= 2 * n; ++s)
        for (E::Mask a : masks_of_degree(2 * n, r))
          for (E::Mask b : masks_of_degree(2 * n, s)) {
            const Rational ab = pairing(from_mask(v, a), from_mask(v, b));
            if (r != s) {
              EXPECT_TRUE(ab.is_zero());
            } else {
              const Rational ba = pairing(from_mask(v, b), from_mask(v, a));
              EXPECT_EQ(ab, r % 2 ? -ba : ba);
            }
          }
  }
}

TEST(Laexp, Examples) {
  for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(laexp_defect(E::scalar(SymplecticSpace(n), 1)), Rational(0));
  EXPECT_EQ(laexp_defect(E::monomial(SymplecticSpace(2), {1, 2})), Rational(0));
  EXPECT_THROW(laexp_defect(E::basis(SymplecticSpace(2), 1)), std::invalid_argument);
}

TEST(Laexp, ExhaustiveOverBasisMonomials) {
  for (unsigned n = 1; n <= 3; ++n) {
    const SymplecticSpace v(n);
    for (unsigned p = 0; p <= n; ++p)
      for (E::Mask m : masks_of_degree(2 * n, 2 * p)) EXPECT_EQ(laexp_defect(from_mask(v, m)), Rational(0));
  }
}

// alpha ^ sigma^{n-p} = (n-p)!/(p! n!) <alpha, sigma^p> sigma^n on basis alpha.
TEST(Laexp, ScaledDisplayedIdentity) {
  for (unsigned n = 1; n <= 3; ++n) {
    const SymplecticSpace v(n);
    const E s = E::sigma(v);
    for (unsigned p = 0; p <= n; ++p)
      for (E::Mask m : masks_of_degree(2 * n, 2 * p)) {
        const E alpha = from_mask(v, m);
        const Rational scale = factorial(n - p) / (factorial(p) * factorial(n));
        EXPECT_EQ(wedge(alpha, power(s, n - p)), power(s, n) * (scale * pairing(alpha, power(s, p))));
      }
  }
}

TEST(Laexp, SeededRandomElements) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + trial % 3;
    const unsigned p = static_cast<unsigned>(trial / 3) % (n + 1);
    const SymplecticSpace v(n);
    E alpha(v);
    for (E::Mask m : masks_of_degree(2 * n, 2 * p)) alpha.add_term(m, Rational(coef(rng), 1 + trial % 4));
    EXPECT_EQ(laexp_defect(alpha), Rational(0)) << "trial " << trial;
  }
}

TEST(Laexp, Sweep) {
  const LaexpSweep s = sweep_laexp(3, 50, 20240601);
  // 2 + 8 + 32 even-degree monomials, then 50 random elements.
  EXPECT_EQ(s.checked, 92u);
  EXPECT_EQ(s.defects, 0u);
  EXPECT_EQ(sweep_laexp(0, 10, 1).checked, 0u);
}

}  // namespace
}  // namespace hrr::multilinear
