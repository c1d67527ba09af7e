#ifndef HRR_GRAPHHOM_SYM3_HPP
#define HRR_GRAPHHOM_SYM3_HPP

#include <array>
#include <map>
#include <string>

#include "hrr/arith/rational.hpp"

namespace hrr::graphhom {

// Cubic polynomials in commuting variables x_0, x_1, ...; a monomial
// x_a x_b x_c is keyed by its sorted index triple.
class Sym3Poly {
public:
  using Monomial = std::array<unsigned, 3>;

  Sym3Poly() = default;

  static Monomial monomial(unsigned a, unsigned b, unsigned c);
  void add(unsigned a, unsigned b, unsigned c, const Rational& coeff);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(unsigned a, unsigned b, unsigned c) const;
  // Terms whose indices sum to w.
  Sym3Poly weight_part(unsigned w) const;

  Sym3Poly& operator+=(const Sym3Poly& o);
  Sym3Poly& operator-=(const Sym3Poly& o);
  Sym3Poly& operator*=(const Rational& c);
  friend Sym3Poly operator+(Sym3Poly a, const Sym3Poly& b) { return a += b; }
  friend Sym3Poly operator-(Sym3Poly a, const Sym3Poly& b) { return a -= b; }
  friend Sym3Poly operator*(const Rational& c, Sym3Poly a) { return a *= c; }
  friend bool operator==(const Sym3Poly&, const Sym3Poly&) = default;

  std::string str() const;

private:
  std::map<Monomial, Rational> terms_;
};

// sum_{l,m} (-1)^{l+m} C(i,l) C(j,m) x_l x_m x_{i+j-l-m}, unscaled.
Sym3Poly double_wheel_sum(unsigned i, unsigned j);

// Image of the double wheel w_{i,j}: twice double_wheel_sum for i + j even,
// zero otherwise.
Sym3Poly p_map(unsigned i, unsigned j);

// Left side of the Bernoulli identity in Sym^3, restricted to index weight at
// most max_weight, minus x_0^3 / 12.
Sym3Poly lemma_bernoulli_defect(unsigned max_weight);

}  // namespace hrr::graphhom

#endif  // HRR_GRAPHHOM_SYM3_HPP
