#ifndef HRR_MULTILINEAR_EXTERIOR_HPP
#define HRR_MULTILINEAR_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hrr/arith/rational.hpp"

namespace hrr::multilinear {

// Q^{2n} with the standard symplectic form
//   sigma = theta^1 ^ theta^2 + ... + theta^{2n-1} ^ theta^{2n}.
//
// Forms are identified with alternating multilinear maps through the
// determinant, (a_1 ^ ... ^ a_r)(v_1, ..., v_r) = det(a_i(v_j)). Other
// identifications change signs and factorials in the pairing below; do not
// mix formulas across conventions.
class SymplecticSpace {
public:
  explicit SymplecticSpace(unsigned n);

  unsigned half_dimension() const { return n_; }
  unsigned dimension() const { return 2 * n_; }
  // Dual form on V^*: sigma^*(theta^{2i-1}, theta^{2i}) = 1, antisymmetric,
  // zero otherwise. Indices are 1-based.
  Rational dual_pairing(unsigned i, unsigned j) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

private:
  unsigned n_;
};

// Element of the exterior algebra over V^*, stored as a map from index sets
// (bit i-1 set <=> theta^i present) to coefficients. Zero coefficients are
// never stored.
class ExteriorElement {
public:
  using Mask = std::uint32_t;

  explicit ExteriorElement(SymplecticSpace space) : space_(space) {}

  static ExteriorElement scalar(SymplecticSpace space, const Rational& c);
  static ExteriorElement basis(SymplecticSpace space, unsigned i);
  // theta^{i_1} ^ ... ^ theta^{i_k} in the given order (sign included).
  static ExteriorElement monomial(SymplecticSpace space, const std::vector<unsigned>& indices);
  static ExteriorElement sigma(SymplecticSpace space);
  static ExteriorElement exp_sigma(SymplecticSpace space);

  const SymplecticSpace& space() const { return space_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ExteriorElement homogeneous(unsigned degree) const;
  // Throws std::invalid_argument if the element is not homogeneous.
  unsigned degree() const;

  void add_term(Mask m, const Rational& c);

  ExteriorElement& operator+=(const ExteriorElement& o);
  ExteriorElement& operator-=(const ExteriorElement& o);
  ExteriorElement& operator*=(const Rational& c);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(ExteriorElement a, const Rational& c) { return a *= c; }
  friend ExteriorElement operator*(const Rational& c, ExteriorElement a) { return a *= c; }
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  std::string str() const;

private:
  SymplecticSpace space_;
  std::map<Mask, Rational> terms_;
};

// Graded-anticommutative product. Throws std::invalid_argument on ambient
// mismatch.
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement power(const ExteriorElement& a, unsigned k);

// <a_1^...^a_r, b_1^...^b_s> = delta_rs det(sigma^*(a_i, b_j)), extended
// bilinearly.
Rational pairing(const ExteriorElement& a, const ExteriorElement& b);

// Coefficient of theta^1 ^ ... ^ theta^{2n}.
Rational top_projection(const ExteriorElement& a);

// top(alpha ^ exp sigma) - <alpha, exp sigma> top(exp sigma); identically
// zero. alpha must be homogeneous of even degree (std::invalid_argument
// otherwise).
Rational laexp_defect(const ExteriorElement& alpha);

struct LaexpSweep {
  std::size_t checked = 0;
  std::size_t defects = 0;
};

// laexp_defect on every basis monomial of even degree for 1 <= n <= max_n,
// then on random_count random homogeneous elements (small integer
// coefficients, mt19937 seeded with seed) spread over the same range.
LaexpSweep sweep_laexp(unsigned max_n, unsigned random_count, std::uint32_t seed);

}  // namespace hrr::multilinear

#endif  // HRR_MULTILINEAR_EXTERIOR_HPP
