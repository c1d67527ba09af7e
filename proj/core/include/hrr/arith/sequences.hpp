#ifndef HRR_ARITH_SEQUENCES_HPP
#define HRR_ARITH_SEQUENCES_HPP

#include "hrr/arith/polynomial.hpp"
#include "hrr/arith/power_series.hpp"
#include "hrr/arith/rational.hpp"

namespace hrr {

// B_k from the expansion of t/(e^t - 1), so B_1 = -1/2.
Rational bernoulli(unsigned k);

// b_k with sum_k b_k x^k = (1/2) log(sinh(x/2) / (x/2)). Only even k are
// accepted (std::invalid_argument otherwise); b_0 = 0.
Rational modified_bernoulli(unsigned k);

// Chebyshev polynomial of the first kind T_n in the variable "x".
Polynomial1 chebyshev(unsigned n);

// T_{2k}(sqrt(lambda/4 + 1)) as an exact polynomial in "lambda". T_{2k} is
// even, so the square root never appears.
Polynomial1 chebyshev_even_lambda(unsigned k);

// t/(e^t - 1) and (1/2) log(sinh(x/2)/(x/2)) truncated at the given order.
PowerSeries bernoulli_generating_series(std::size_t order);
PowerSeries modified_bernoulli_generating_series(std::size_t order);

}  // namespace hrr

#endif  // HRR_ARITH_SEQUENCES_HPP
