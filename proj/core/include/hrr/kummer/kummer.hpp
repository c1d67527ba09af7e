#ifndef HRR_KUMMER_KUMMER_HPP
#define HRR_KUMMER_KUMMER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hrr/arith/polynomial.hpp"
#include "hrr/arith/qmatrix.hpp"
#include "hrr/charclass/genus.hpp"

namespace hrr {

// Largest n for which relation systems are built.
inline constexpr unsigned kummer_max_n = 6;

// The relation system is inconsistent or a unique solution is not integral.
struct KummerSolveError : std::logic_error {
  using std::logic_error::logic_error;
};

// chi(L) = (n+1) binom(q/2 + n, n) for q = c_1(L)^2.
Rational kummer_euler_q(unsigned n, const Rational& q);
// chi(L) = (n+1) binom((n+1) lambda / 4 + n, n) as a polynomial in lambda.
Polynomial1 kummer_euler_lambda(unsigned n);
// The chi_y genus in y from the Hodge numbers of the generalized Kummer
// variety of dimension 2n.
Polynomial1 chi_y_kummer(unsigned n);
// binom(chi + n - 1, n), a polynomial in chi.
Rational chi_symmetric_power(const Rational& chi, unsigned n);

enum class RelationSource { LambdaCoefficient, ChiYCoefficient };

struct RelationRow {
  RelationSource source;
  unsigned index;  // lambda power or y power
  std::vector<Rational> coeffs;
  Rational rhs;

  std::string label() const;
};

struct RelationSystem {
  unsigned n = 0;
  std::vector<ChernPolynomial::Exponents> unknowns;  // the weight-2n monomials
  std::vector<RelationRow> rows;

  QMatrix matrix() const;
  std::vector<Rational> rhs() const;
  // Row value minus right-hand side at the given Chern numbers.
  Rational residual(const RelationRow& row, const ChernNumbers& values) const;
};

// Rows: the lambda^j coefficients of  integral td_deformed = chi(L)  for
// j = 0..n, then the y^p coefficients of the chi_y genus for p = 0..n.
// Throws std::out_of_range unless 1 <= n <= kummer_max_n.
RelationSystem build_relations(unsigned n);

struct ChernNumberTable {
  unsigned n = 0;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  SolveKind kind = SolveKind::Inconsistent;
  ChernNumbers values;  // filled only for a unique solution

  bool unique() const { return kind == SolveKind::Unique; }
};

// Throws KummerSolveError if the system is inconsistent or the unique
// solution is not integral.
ChernNumberTable solve_chern_numbers(unsigned n);

}  // namespace hrr

#endif  // HRR_KUMMER_KUMMER_HPP
