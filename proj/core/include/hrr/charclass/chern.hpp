#ifndef HRR_CHARCLASS_CHERN_HPP
#define HRR_CHARCLASS_CHERN_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hrr/arith/polynomial.hpp"
#include "hrr/arith/rational.hpp"

namespace hrr {

struct WeightError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Polynomials in the even Chern classes c_2, c_4, ..., c_2n of a
// 2n-dimensional manifold. c_2i has weight 2i (its complex degree) and every
// term of weight above 2n is dropped.
class ChernPolynomial {
public:
  // exponents[i - 1] is the power of c_2i.
  using Exponents = std::vector<unsigned>;

  explicit ChernPolynomial(unsigned n) : n_(n) {}
  static ChernPolynomial constant(unsigned n, const Rational& c);
  // c_{2i} for 1 <= i <= n (std::out_of_range otherwise).
  static ChernPolynomial generator(unsigned n, unsigned i);
  static ChernPolynomial monomial(unsigned n, const Exponents& e, const Rational& c = Rational(1));

  unsigned n() const { return n_; }
  unsigned max_weight() const { return 2 * n_; }
  static unsigned weight(const Exponents& e);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  ChernPolynomial weight_part(unsigned w) const;
  // Highest weight carrying a nonzero term, -1 for zero.
  int top_weight() const;

  void add(const Exponents& e, const Rational& c);
  ChernPolynomial& operator+=(const ChernPolynomial& o);
  ChernPolynomial& operator-=(const ChernPolynomial& o);
  ChernPolynomial& operator*=(const Rational& c);
  friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
  friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
  friend ChernPolynomial operator*(const Rational& c, ChernPolynomial a) { return a *= c; }
  friend ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b);
  friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;

  // "3*c2^2 - c4", terms by increasing weight.
  std::string str() const;

private:
  unsigned n_;
  std::map<Exponents, Rational> terms_;
};

// Monomials of weight w in c_2..c_2n, ordered with higher powers of c_2 first.
std::vector<ChernPolynomial::Exponents> monomials_of_weight(unsigned n, unsigned w);
// "c2^3*c4", "1" for the empty monomial.
std::string monomial_name(const ChernPolynomial::Exponents& e);
// Inverse of monomial_name; throws std::invalid_argument.
ChernPolynomial::Exponents parse_monomial(unsigned n, const std::string& name);

// exp of a class without constant term (std::invalid_argument otherwise).
ChernPolynomial exp(const ChernPolynomial& p);
// log of a class with constant term 1.
ChernPolynomial log(const ChernPolynomial& p);

// Polynomial in a formal variable (lambda or y) with Chern coefficients.
class ChernCoeffPolynomial {
public:
  ChernCoeffPolynomial(std::string var, unsigned n) : var_(std::move(var)), n_(n) {}

  const std::string& var() const { return var_; }
  unsigned n() const { return n_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  ChernPolynomial coeff(unsigned k) const;
  void add(unsigned k, const ChernPolynomial& c);

  // The weight-w part as an ordinary polynomial in var for each monomial.
  ChernCoeffPolynomial weight_part(unsigned w) const;
  ChernPolynomial eval(const Rational& x) const;

  ChernCoeffPolynomial& operator+=(const ChernCoeffPolynomial& o);
  friend ChernCoeffPolynomial operator*(const ChernCoeffPolynomial& a, const ChernCoeffPolynomial& b);
  friend bool operator==(const ChernCoeffPolynomial& a, const ChernCoeffPolynomial& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

private:
  void trim();

  std::string var_;
  unsigned n_;
  std::vector<ChernPolynomial> coeffs_;
};

using LambdaSeries = ChernCoeffPolynomial;
using YPolynomial = ChernCoeffPolynomial;

// exp of a polynomial whose constant coefficient has no weight-0 term.
ChernCoeffPolynomial exp(const ChernCoeffPolynomial& p);

}  // namespace hrr

#endif  // HRR_CHARCLASS_CHERN_HPP
