#ifndef HRR_CHARCLASS_GENUS_HPP
#define HRR_CHARCLASS_GENUS_HPP

#include <map>

#include "hrr/arith/power_series.hpp"
#include "hrr/charclass/chern.hpp"

namespace hrr {

// Power sums of the Chern roots of a 2n-dimensional manifold with vanishing
// odd Chern classes, via Newton's identities. p_k is the weight-k class
// s_k = k! ch_k; odd ones vanish.
class SymFuncContext {
public:
  explicit SymFuncContext(unsigned n);

  unsigned n() const { return n_; }
  // s_k for 1 <= k <= 2n (WeightError otherwise).
  const ChernPolynomial& s(unsigned k) const;
  // Elementary symmetric functions of the roots from arbitrary power sums
  // p_1..p_2n: e_1..e_2n (index 0 holds 1).
  std::vector<ChernPolynomial> elementary_from_power_sums(const std::vector<ChernPolynomial>& p) const;

private:
  unsigned n_;
  std::vector<ChernPolynomial> s_;  // s_[k], s_[0] unused
};

ChernPolynomial s_from_c(unsigned k, const SymFuncContext& ctx);

// exp(-2 sum_k b_2k s_2k).
ChernPolynomial todd_symplectic(const SymFuncContext& ctx);
// exp(-2 sum_k b_2k s_2k T_2k(sqrt(lambda/4 + 1))) as a polynomial in lambda.
LambdaSeries todd_deformed(const SymFuncContext& ctx);
// exp(-sum_k b_2k s_2k).
ChernPolynomial sqrt_todd(const SymFuncContext& ctx);
// td(X) * sum_p y^p ch(Lambda^p Omega_X).
YPolynomial chi_y_integrand(const SymFuncContext& ctx);
// prod_i Q(x_i) for Q(0) = 1 (std::invalid_argument otherwise). The series
// must be known at least up to x^{2n}.
ChernPolynomial genus_from_series(const PowerSeries& q, const SymFuncContext& ctx);

// Chern numbers: values of the weight-2n monomials.
using ChernNumbers = std::map<ChernPolynomial::Exponents, Rational>;

// Evaluates the top-weight part of p; throws std::invalid_argument when a
// monomial with nonzero coefficient has no value.
Rational integrate(const ChernPolynomial& p, const ChernNumbers& values);
// Coefficientwise integration of a polynomial in a formal variable.
Polynomial1 integrate(const ChernCoeffPolynomial& p, const ChernNumbers& values);

}  // namespace hrr

#endif  // HRR_CHARCLASS_GENUS_HPP
