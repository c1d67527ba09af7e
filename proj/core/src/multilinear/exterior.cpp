#include "hrr/multilinear/exterior.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "hrr/arith/qmatrix.hpp"

namespace hrr::multilinear {

namespace {

using Mask = ExteriorElement::Mask;

void require_same(const SymplecticSpace& a, const SymplecticSpace& b) {
  if (!(a == b)) throw std::invalid_argument("exterior algebra: ambient spaces differ");
}

std::vector<unsigned> indices_of(Mask m) {
  std::vector<unsigned> out;
  for (unsigned i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

// Sign of theta^I ^ theta^J relative to theta^{I u J}; 0 if they overlap.
int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

SymplecticSpace::SymplecticSpace(unsigned n) : n_(n) {
  if (2 * n > 31) throw std::invalid_argument("SymplecticSpace: dimension too large");
}

Rational SymplecticSpace::dual_pairing(unsigned i, unsigned j) const {
  if (i % 2 == 1 && j == i + 1) return 1;
  if (j % 2 == 1 && i == j + 1) return -1;
  return 0;
}

ExteriorElement ExteriorElement::scalar(SymplecticSpace space, const Rational& c) {
  ExteriorElement e(space);
  e.add_term(0, c);
  return e;
}

ExteriorElement ExteriorElement::basis(SymplecticSpace space, unsigned i) {
  if (i < 1 || i > space.dimension()) throw std::out_of_range("ExteriorElement::basis: index");
  ExteriorElement e(space);
  e.add_term(Mask{1} << (i - 1), 1);
  return e;
}

ExteriorElement ExteriorElement::monomial(SymplecticSpace space, const std::vector<unsigned>& indices) {
  ExteriorElement e = scalar(space, 1);
  for (unsigned i : indices) e = wedge(e, basis(space, i));
  return e;
}

ExteriorElement ExteriorElement::sigma(SymplecticSpace space) {
  ExteriorElement e(space);
  for (unsigned i = 1; i <= space.half_dimension(); ++i) e.add_term(Mask{3} << (2 * i - 2), 1);
  return e;
}

ExteriorElement ExteriorElement::exp_sigma(SymplecticSpace space) {
  const ExteriorElement s = sigma(space);
  ExteriorElement acc = scalar(space, 1);
  ExteriorElement term = acc;
  for (unsigned k = 1; k <= space.half_dimension(); ++k) {
    term = wedge(term, s) * Rational(1, static_cast<long>(k));
    acc += term;
  }
  return acc;
}

ExteriorElement ExteriorElement::homogeneous(unsigned degree) const {
  ExteriorElement out(space_);
  for (const auto& [m, c] : terms_)
    if (static_cast<unsigned>(std::popcount(m)) == degree) out.terms_.emplace(m, c);
  return out;
}

unsigned ExteriorElement::degree() const {
  if (terms_.empty()) return 0;
  const unsigned d = static_cast<unsigned>(std::popcount(terms_.begin()->first));
  for (const auto& [m, c] : terms_)
    if (static_cast<unsigned>(std::popcount(m)) != d)
      throw std::invalid_argument("ExteriorElement::degree: element is not homogeneous");
  return d;
}

void ExteriorElement::add_term(Mask m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
  require_same(space_, o.space_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
  require_same(space_, o.space_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string ExteriorElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (unsigned i : indices_of(m)) out += "*t" + std::to_string(i);
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  require_same(a.space(), b.space());
  ExteriorElement out(a.space());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s != 0) out.add_term(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  return out;
}

ExteriorElement power(const ExteriorElement& a, unsigned k) {
  ExteriorElement acc = ExteriorElement::scalar(a.space(), 1);
  for (unsigned i = 0; i < k; ++i) acc = wedge(acc, a);
  return acc;
}

Rational pairing(const ExteriorElement& a, const ExteriorElement& b) {
  require_same(a.space(), b.space());
  Rational total;
  for (const auto& [ma, ca] : a.terms()) {
    const auto ia = indices_of(ma);
    for (const auto& [mb, cb] : b.terms()) {
      if (std::popcount(ma) != std::popcount(mb)) continue;
      const auto ib = indices_of(mb);
      QMatrix m(ia.size(), ib.size());
      for (std::size_t r = 0; r < ia.size(); ++r)
        for (std::size_t c = 0; c < ib.size(); ++c) m(r, c) = a.space().dual_pairing(ia[r], ib[c]);
      total += determinant(std::move(m)) * ca * cb;
    }
  }
  return total;
}

Rational top_projection(const ExteriorElement& a) {
  const Mask top = a.space().dimension() == 0 ? 0 : (Mask{1} << a.space().dimension()) - 1;
  const auto it = a.terms().find(top);
  return it == a.terms().end() ? Rational(0) : it->second;
}

Rational laexp_defect(const ExteriorElement& alpha) {
  const unsigned d = alpha.degree();
  if (d % 2 != 0) throw std::invalid_argument("laexp_defect: alpha must have even degree");
  const ExteriorElement e = ExteriorElement::exp_sigma(alpha.space());
  return top_projection(wedge(alpha, e)) - pairing(alpha, e) * top_projection(e);
}

LaexpSweep sweep_laexp(unsigned max_n, unsigned random_count, std::uint32_t seed) {
  LaexpSweep out;
  auto record = [&out](const ExteriorElement& a) {
    ++out.checked;
    if (!laexp_defect(a).is_zero()) ++out.defects;
  };
  for (unsigned n = 1; n <= max_n; ++n) {
    const SymplecticSpace v(n);
    for (ExteriorElement::Mask m = 0; m < (ExteriorElement::Mask{1} << (2 * n)); ++m) {
      if (std::popcount(m) % 2 != 0) continue;
      ExteriorElement a(v);
      a.add_term(m, 1);
      record(a);
    }
  }
  if (max_n == 0) return out;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> pick_n(1, max_n);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (unsigned r = 0; r < random_count; ++r) {
    const unsigned n = pick_n(rng);
    const SymplecticSpace v(n);
    const unsigned p = std::uniform_int_distribution<unsigned>(0, n)(rng);
    ExteriorElement a(v);
    while (a.is_zero())
      for (ExteriorElement::Mask m = 0; m < (ExteriorElement::Mask{1} << (2 * n)); ++m)
        if (static_cast<unsigned>(std::popcount(m)) == 2 * p) a.add_term(m, coeff(rng));
    record(a);
  }
  return out;
}

}  // namespace hrr::multilinear
