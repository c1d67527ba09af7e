#ifndef HRR_GRAPHHOM_OMEGA_HPP
#define HRR_GRAPHHOM_OMEGA_HPP

#include <map>
#include <string>
#include <vector>

#include "hrr/graphhom/quotient.hpp"

namespace hrr::graphhom {

// A graph-valued polynomial in mu: exponent -> coefficient.
using MuSeries = std::map<unsigned, GraphVector>;

// exp(sum_k b_2k w_2k mu^2k) up to mu^max_mu_power. The mu exponent of a term
// is half its number of vertices.
MuSeries omega_mu(unsigned max_mu_power);

struct OmegaSlice {
  unsigned mu_power = 0;
  Bidegree bidegree;
  GraphVector defect;  // reduced in the quotient
  std::vector<Rational> coordinates;
};

// For every even mu power whose output bidegree has total degree <= max_degree,
// reduces the mu^m coefficient of  partial Omega - (mu^2/48) Theta Omega.
std::vector<OmegaSlice> verify_omega_eigen(unsigned max_degree, BasisRegistry& registry);

// One checked instance of an identity.
struct IdentityCheck {
  std::string label;
  bool holds = false;
  std::string detail;  // residual when the identity fails
};

// partial w_2k = k sum_m w_{m, 2k-2-m} as diagram combinations, k <= max_k.
std::vector<IdentityCheck> verify_wheel_partial(unsigned max_k);
// partial(w_2i, w_2j) = 8ij w_{2i-1, 2j-1} in the quotient, i, j >= 1,
// i + j <= max_sum.
std::vector<IdentityCheck> verify_wheel_bilinear(unsigned max_sum, BasisRegistry& registry);
// partial(g^n) = n partial(g) g^{n-1} + C(n,2) partial(g,g) g^{n-2} for g = w_2.
std::vector<IdentityCheck> verify_power_rule(unsigned max_n);
// <g, (ell/2) h> = <partial g, h> for basis g, h without ell components,
// total degree of the pair <= max_total.
std::vector<IdentityCheck> verify_ell_partial(unsigned max_total, BasisRegistry& registry);
// <exp(partial)(g h), 1> = <exp(partial) g, exp(partial) h> for basis g, h
// without ell components, total degree of the pair <= max_total.
std::vector<IdentityCheck> verify_scp_partial(unsigned max_total, BasisRegistry& registry);

// Basis diagrams without ell components at every bidegree of total degree
// <= max_total.
std::vector<CanonicalDiagram> ell_free_basis(unsigned max_total, BasisRegistry& registry);

}  // namespace hrr::graphhom

#endif  // HRR_GRAPHHOM_OMEGA_HPP
