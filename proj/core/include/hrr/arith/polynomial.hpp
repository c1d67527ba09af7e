#ifndef HRR_ARITH_POLYNOMIAL_HPP
#define HRR_ARITH_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "hrr/arith/rational.hpp"

namespace hrr {

// Univariate polynomial over Q in a named formal variable (x, lambda, y, ...).
// Trailing zero coefficients are never stored; the zero polynomial has
// degree() == -1.
class Polynomial1 {
public:
  Polynomial1() = default;
  explicit Polynomial1(std::string var) : var_(std::move(var)) {}
  Polynomial1(std::string var, std::vector<Rational> coeffs);
  Polynomial1(std::string var, std::initializer_list<Rational> coeffs)
      : Polynomial1(std::move(var), std::vector<Rational>(coeffs)) {}

  static Polynomial1 constant(std::string var, const Rational& c) { return {std::move(var), {c}}; }
  static Polynomial1 monomial(std::string var, unsigned power, const Rational& c = 1);

  const std::string& var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& x) const;
  // p(q(var)) in the variable of q.
  Polynomial1 compose(const Polynomial1& inner) const;
  bool is_even() const;
  bool is_palindromic(unsigned total_degree) const;

  Polynomial1& operator+=(const Polynomial1& o);
  Polynomial1& operator-=(const Polynomial1& o);
  Polynomial1& operator*=(const Rational& c);
  friend Polynomial1 operator+(Polynomial1 a, const Polynomial1& b) { return a += b; }
  friend Polynomial1 operator-(Polynomial1 a, const Polynomial1& b) { return a -= b; }
  friend Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b);
  friend Polynomial1 operator*(Polynomial1 a, const Rational& c) { return a *= c; }
  friend Polynomial1 operator*(const Rational& c, Polynomial1 a) { return a *= c; }
  // Equality compares coefficients only; the variable name is a label.
  friend bool operator==(const Polynomial1& a, const Polynomial1& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

private:
  void trim();

  std::string var_ = "x";
  std::vector<Rational> coeffs_;
};

}  // namespace hrr

#endif  // HRR_ARITH_POLYNOMIAL_HPP
