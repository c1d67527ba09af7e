#ifndef HRR_ARITH_POWER_SERIES_HPP
#define HRR_ARITH_POWER_SERIES_HPP

#include <cstddef>
#include <vector>

#include "hrr/arith/rational.hpp"

namespace hrr {

// Truncated formal power series: known modulo x^order. coeffs().size() == order.
class PowerSeries {
public:
  explicit PowerSeries(std::size_t order) : c_(order) {}
  PowerSeries(std::size_t order, std::vector<Rational> coeffs);

  static PowerSeries one(std::size_t order);
  static PowerSeries x(std::size_t order);
  // e^{a x}
  static PowerSeries exp_linear(const Rational& a, std::size_t order);

  std::size_t order() const { return c_.size(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational& at(std::size_t k) { return c_.at(k); }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& s);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  // Requires nonzero constant term (std::domain_error otherwise).
  PowerSeries inverse() const;
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }
  // Requires constant term 0.
  PowerSeries exp() const;
  // Requires constant term 1.
  PowerSeries log() const;
  // Divides by x; requires constant term 0. Order drops by one.
  PowerSeries shift_down() const;
  // f(g(x)); requires g(0) == 0.
  PowerSeries compose(const PowerSeries& inner) const;
  PowerSeries derivative() const;

private:
  std::vector<Rational> c_;
};

}  // namespace hrr

#endif  // HRR_ARITH_POWER_SERIES_HPP
