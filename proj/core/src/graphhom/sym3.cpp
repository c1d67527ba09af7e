#include "hrr/graphhom/sym3.hpp"

#include <algorithm>
#include <sstream>

#include "hrr/arith/sequences.hpp"

namespace hrr::graphhom {

Sym3Poly::Monomial Sym3Poly::monomial(unsigned a, unsigned b, unsigned c) {
  Monomial m{a, b, c};
  std::sort(m.begin(), m.end());
  return m;
}

void Sym3Poly::add(unsigned a, unsigned b, unsigned c, const Rational& coeff) {
  if (coeff.is_zero()) return;
  const Monomial m = monomial(a, b, c);
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational Sym3Poly::coefficient(unsigned a, unsigned b, unsigned c) const {
  const auto it = terms_.find(monomial(a, b, c));
  return it == terms_.end() ? Rational(0) : it->second;
}

Sym3Poly Sym3Poly::weight_part(unsigned w) const {
  Sym3Poly out;
  for (const auto& [m, c] : terms_)
    if (m[0] + m[1] + m[2] == w) out.terms_.emplace(m, c);
  return out;
}

Sym3Poly& Sym3Poly::operator+=(const Sym3Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m[0], m[1], m[2], c);
  return *this;
}

Sym3Poly& Sym3Poly::operator-=(const Sym3Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m[0], m[1], m[2], -c);
  return *this;
}

Sym3Poly& Sym3Poly::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

std::string Sym3Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << "*x" << m[0] << "*x" << m[1] << "*x" << m[2];
  }
  return out.str();
}

Sym3Poly double_wheel_sum(unsigned i, unsigned j) {
  Sym3Poly out;
  for (unsigned l = 0; l <= i; ++l)
    for (unsigned m = 0; m <= j; ++m) {
      Rational c = binomial(Rational(i), l) * binomial(Rational(j), m);
      if ((l + m) % 2) c = -c;
      out.add(l, m, i + j - l - m, c);
    }
  return out;
}

Sym3Poly p_map(unsigned i, unsigned j) {
  if ((i + j) % 2) return {};
  return Rational(2) * double_wheel_sum(i, j);
}

Sym3Poly lemma_bernoulli_defect(unsigned max_weight) {
  Sym3Poly out;
  for (unsigned k = 2; k <= max_weight + 2; ++k) {
    const Rational c = bernoulli(k) / factorial(k);
    if (c.is_zero()) continue;
    for (unsigned n = 0; n <= k - 2; ++n) out += c * double_wheel_sum(n, k - 2 - n);
  }
  for (unsigned i = 2; i <= max_weight; ++i)
    for (unsigned j = 2; i + j <= max_weight + 2; ++j) {
      const Rational c = bernoulli(i) / factorial(i) * bernoulli(j) / factorial(j);
      if (!c.is_zero()) out += c * double_wheel_sum(i - 1, j - 1);
    }
  out.add(0, 0, 0, Rational(-1, 12));
  return out;
}

}  // namespace hrr::graphhom
