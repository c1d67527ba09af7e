#include "hrr/charclass/chern.hpp"

#include <algorithm>
#include <sstream>

namespace hrr {

namespace {

void check_same_dimension(unsigned a, unsigned b) {
  if (a != b) throw std::invalid_argument("Chern classes of different dimensions combined");
}

// Terms ordered by increasing weight, then by decreasing exponent vector.
template <class Map>
std::vector<typename Map::const_iterator> print_order(const Map& terms) {
  std::vector<typename Map::const_iterator> its;
  for (auto it = terms.begin(); it != terms.end(); ++it) its.push_back(it);
  std::sort(its.begin(), its.end(), [](auto a, auto b) {
    const unsigned wa = ChernPolynomial::weight(a->first), wb = ChernPolynomial::weight(b->first);
    return wa != wb ? wa < wb : a->first > b->first;
  });
  return its;
}

void append_term(std::ostringstream& out, bool first, const Rational& c, const std::string& mono) {
  Rational a = c;
  if (a.sign() < 0) {
    out << (first ? "-" : " - ");
    a = -a;
  } else if (!first) {
    out << " + ";
  }
  if (mono.empty()) {
    out << a.str();
  } else {
    if (!a.is_one()) out << a.str() << '*';
    out << mono;
  }
}

}  // namespace

ChernPolynomial ChernPolynomial::constant(unsigned n, const Rational& c) {
  ChernPolynomial p(n);
  p.add(Exponents(n, 0), c);
  return p;
}

ChernPolynomial ChernPolynomial::generator(unsigned n, unsigned i) {
  if (i == 0 || i > n) throw std::out_of_range("c_" + std::to_string(2 * i) + " is not a generator for n = " + std::to_string(n));
  Exponents e(n, 0);
  e[i - 1] = 1;
  return monomial(n, e);
}

ChernPolynomial ChernPolynomial::monomial(unsigned n, const Exponents& e, const Rational& c) {
  if (e.size() != n) throw std::invalid_argument("exponent vector has the wrong length");
  ChernPolynomial p(n);
  p.add(e, c);
  return p;
}

unsigned ChernPolynomial::weight(const Exponents& e) {
  unsigned w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += 2 * static_cast<unsigned>(i + 1) * e[i];
  return w;
}

Rational ChernPolynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ChernPolynomial::constant_term() const { return coefficient(Exponents(n_, 0)); }

ChernPolynomial ChernPolynomial::weight_part(unsigned w) const {
  ChernPolynomial out(n_);
  for (const auto& [e, c] : terms_)
    if (weight(e) == w) out.terms_.emplace(e, c);
  return out;
}

int ChernPolynomial::top_weight() const {
  int w = -1;
  for (const auto& [e, c] : terms_) w = std::max(w, static_cast<int>(weight(e)));
  return w;
}

void ChernPolynomial::add(const Exponents& e, const Rational& c) {
  if (e.size() != n_) throw std::invalid_argument("exponent vector has the wrong length");
  if (c.is_zero() || weight(e) > max_weight()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& o) {
  check_same_dimension(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& o) {
  check_same_dimension(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b) {
  check_same_dimension(a.n_, b.n_);
  ChernPolynomial out(a.n_);
  ChernPolynomial::Exponents e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

std::string ChernPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it : print_order(terms_)) {
    const std::string name = weight(it->first) == 0 ? std::string() : monomial_name(it->first);
    append_term(out, first, it->second, name);
    first = false;
  }
  return out.str();
}

std::vector<ChernPolynomial::Exponents> monomials_of_weight(unsigned n, unsigned w) {
  std::vector<ChernPolynomial::Exponents> out;
  if (w % 2 != 0) return out;
  ChernPolynomial::Exponents e(n, 0);
  // Choose the power of c_2, then c_4, ..., spending the remaining weight.
  auto rec = [&](auto&& self, unsigned i, unsigned left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(e);
      return;
    }
    const unsigned wi = 2 * (i + 1);
    for (unsigned k = left / wi + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k * wi);
    }
    e[i] = 0;
  };
  rec(rec, 0, w);
  return out;
}

std::string monomial_name(const ChernPolynomial::Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "c" + std::to_string(2 * (i + 1));
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

ChernPolynomial::Exponents parse_monomial(unsigned n, const std::string& name) {
  ChernPolynomial::Exponents e(n, 0);
  if (name == "1") return e;
  std::istringstream in(name);
  std::string factor;
  const auto fail = [&] { throw std::invalid_argument("bad Chern monomial '" + name + "'"); };
  while (std::getline(in, factor, '*')) {
    if (factor.size() < 2 || factor[0] != 'c') fail();
    const auto caret = factor.find('^');
    unsigned index = 0, power = 1;
    try {
      std::size_t used = 0;
      index = static_cast<unsigned>(std::stoul(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), &used));
      if (caret != std::string::npos) power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
    } catch (const std::exception&) {
      fail();
    }
    if (index == 0 || index % 2 != 0 || index / 2 > n || power == 0) fail();
    e[index / 2 - 1] += power;
  }
  return e;
}

ChernPolynomial exp(const ChernPolynomial& p) {
  if (!p.constant_term().is_zero()) throw std::invalid_argument("exp: class has a constant term");
  ChernPolynomial out = ChernPolynomial::constant(p.n(), Rational(1));
  ChernPolynomial term = out;
  for (unsigned k = 1;; ++k) {
    term = p * term;
    term *= Rational(1, static_cast<long>(k));
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

ChernPolynomial log(const ChernPolynomial& p) {
  if (!p.constant_term().is_one()) throw std::invalid_argument("log: constant term is not 1");
  const ChernPolynomial q = p - ChernPolynomial::constant(p.n(), Rational(1));
  ChernPolynomial out(p.n());
  ChernPolynomial power = q;
  for (long k = 1; !power.is_zero(); ++k) {
    out += Rational(k % 2 ? 1 : -1, k) * power;
    power = power * q;
  }
  return out;
}

ChernPolynomial ChernCoeffPolynomial::coeff(unsigned k) const {
  return k < coeffs_.size() ? coeffs_[k] : ChernPolynomial(n_);
}

void ChernCoeffPolynomial::add(unsigned k, const ChernPolynomial& c) {
  check_same_dimension(n_, c.n());
  if (c.is_zero()) return;
  while (coeffs_.size() <= k) coeffs_.emplace_back(n_);
  coeffs_[k] += c;
  trim();
}

void ChernCoeffPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ChernCoeffPolynomial ChernCoeffPolynomial::weight_part(unsigned w) const {
  ChernCoeffPolynomial out(var_, n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.add(static_cast<unsigned>(k), coeffs_[k].weight_part(w));
  return out;
}

ChernPolynomial ChernCoeffPolynomial::eval(const Rational& x) const {
  ChernPolynomial out(n_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    out *= x;
    out += coeffs_[k];
  }
  return out;
}

ChernCoeffPolynomial& ChernCoeffPolynomial::operator+=(const ChernCoeffPolynomial& o) {
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) add(static_cast<unsigned>(k), o.coeffs_[k]);
  return *this;
}

ChernCoeffPolynomial operator*(const ChernCoeffPolynomial& a, const ChernCoeffPolynomial& b) {
  if (a.var_ != b.var_) throw std::invalid_argument("polynomials in different variables multiplied");
  ChernCoeffPolynomial out(a.var_, a.n_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.add(static_cast<unsigned>(i + j), a.coeffs_[i] * b.coeffs_[j]);
  return out;
}

std::string ChernCoeffPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << '(' << coeffs_[k].str() << ')';
    if (k > 0) out << '*' << var_;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

ChernCoeffPolynomial exp(const ChernCoeffPolynomial& p) {
  if (!p.coeff(0).constant_term().is_zero()) throw std::invalid_argument("exp: class has a constant term");
  ChernCoeffPolynomial out(p.var(), p.n());
  out.add(0, ChernPolynomial::constant(p.n(), Rational(1)));
  ChernCoeffPolynomial term = out;
  for (unsigned k = 1;; ++k) {
    term = p * term;
    ChernCoeffPolynomial scaled(p.var(), p.n());
    for (int j = 0; j <= term.degree(); ++j)
      scaled.add(static_cast<unsigned>(j), Rational(1, static_cast<long>(k)) * term.coeff(static_cast<unsigned>(j)));
    term = scaled;
    if (term.degree() < 0) break;
    out += term;
  }
  return out;
}

}  // namespace hrr
