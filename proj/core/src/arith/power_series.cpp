#include "hrr/arith/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrr {

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order);
}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  if (order > 0) s.c_[0] = 1;
  return s;
}

PowerSeries PowerSeries::x(std::size_t order) {
  PowerSeries s(order);
  if (order > 1) s.c_[1] = 1;
  return s;
}

PowerSeries PowerSeries::exp_linear(const Rational& a, std::size_t order) {
  PowerSeries s(order);
  Rational term(1);
  for (std::size_t k = 0; k < order; ++k) {
    s.c_[k] = term;
    term = term * a / Rational(static_cast<long>(k + 1));
  }
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

PowerSeries PowerSeries::inverse() const {
  if (c_.empty()) return *this;
  if (c_[0].is_zero()) throw std::domain_error("PowerSeries::inverse: zero constant term");
  PowerSeries out(order());
  const Rational inv0 = c_[0].inverse();
  out.c_[0] = inv0;
  for (std::size_t k = 1; k < order(); ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
    out.c_[k] = -acc * inv0;
  }
  return out;
}

PowerSeries PowerSeries::derivative() const {
  if (c_.empty()) return *this;
  PowerSeries out(order() - 1);
  for (std::size_t k = 1; k < order(); ++k) out.c_[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return out;
}

PowerSeries PowerSeries::exp() const {
  if (c_.empty()) return *this;
  if (!c_[0].is_zero()) throw std::domain_error("PowerSeries::exp: constant term must be 0");
  // f' = g' f, solved coefficient by coefficient.
  PowerSeries out(order());
  out.c_[0] = 1;
  for (std::size_t k = 1; k < order(); ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += Rational(static_cast<long>(j)) * c_[j] * out.c_[k - j];
    out.c_[k] = acc / Rational(static_cast<long>(k));
  }
  return out;
}

PowerSeries PowerSeries::log() const {
  if (c_.empty()) return *this;
  if (!c_[0].is_one()) throw std::domain_error("PowerSeries::log: constant term must be 1");
  // log f = integral of f'/f.
  const PowerSeries q = derivative() * inverse();
  PowerSeries out(order());
  for (std::size_t k = 1; k < order(); ++k) out.c_[k] = q[k - 1] / Rational(static_cast<long>(k));
  return out;
}

PowerSeries PowerSeries::shift_down() const {
  if (c_.empty()) return *this;
  if (!c_[0].is_zero()) throw std::domain_error("PowerSeries::shift_down: constant term must be 0");
  return PowerSeries(order() - 1, std::vector<Rational>(c_.begin() + 1, c_.end()));
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (inner.order() > 0 && !inner.c_[0].is_zero())
    throw std::domain_error("PowerSeries::compose: inner series must vanish at 0");
  const std::size_t n = std::min(order(), inner.order());
  PowerSeries acc(n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * inner;
    acc.c_.resize(n);
    acc.c_[0] += c_[k];
  }
  return acc;
}

}  // namespace hrr
