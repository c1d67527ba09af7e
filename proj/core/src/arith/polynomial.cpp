#include "hrr/arith/polynomial.hpp"

#include <algorithm>

namespace hrr {

Polynomial1::Polynomial1(std::string var, std::vector<Rational> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial1 Polynomial1::monomial(std::string var, unsigned power, const Rational& c) {
  std::vector<Rational> cs(power + 1);
  cs[power] = c;
  return {std::move(var), std::move(cs)};
}

void Polynomial1::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial1::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial1 Polynomial1::compose(const Polynomial1& inner) const {
  Polynomial1 acc(inner.var());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + constant(inner.var(), *it);
  return acc;
}

bool Polynomial1::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool Polynomial1::is_palindromic(unsigned total_degree) const {
  if (degree() > static_cast<int>(total_degree)) return false;
  for (unsigned i = 0; i <= total_degree; ++i)
    if (coeff(i) != coeff(total_degree - i)) return false;
  return true;
}

Polynomial1& Polynomial1::operator+=(const Polynomial1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial1& Polynomial1::operator-=(const Polynomial1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial1& Polynomial1::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial1(a.var());
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return {a.var(), std::move(out)};
}

std::string Polynomial1::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string term;
    const Rational mag = c.abs();
    if (i == 0 || !mag.is_one()) term = mag.str();
    if (i > 0) {
      if (!term.empty()) term += "*";
      term += var_;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + term;
    else
      out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace hrr
