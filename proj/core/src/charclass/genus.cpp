#include "hrr/charclass/genus.hpp"

#include "hrr/arith/sequences.hpp"

namespace hrr {

SymFuncContext::SymFuncContext(unsigned n) : n_(n) {
  const unsigned top = 2 * n;
  std::vector<ChernPolynomial> e(top + 1, ChernPolynomial(n));
  e[0] = ChernPolynomial::constant(n, Rational(1));
  for (unsigned i = 1; i <= n; ++i) e[2 * i] = ChernPolynomial::generator(n, i);
  // p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
  s_.assign(top + 1, ChernPolynomial(n));
  for (unsigned k = 1; k <= top; ++k) {
    ChernPolynomial p = Rational(static_cast<long>(k) * (k % 2 ? 1 : -1)) * e[k];
    for (unsigned i = 1; i < k; ++i) p += Rational(i % 2 ? 1 : -1) * (e[i] * s_[k - i]);
    s_[k] = std::move(p);
  }
}

const ChernPolynomial& SymFuncContext::s(unsigned k) const {
  if (k == 0 || k > 2 * n_)
    throw WeightError("s_" + std::to_string(k) + " exceeds the top weight " + std::to_string(2 * n_));
  return s_[k];
}

std::vector<ChernPolynomial> SymFuncContext::elementary_from_power_sums(const std::vector<ChernPolynomial>& p) const {
  const unsigned top = 2 * n_;
  if (p.size() != top + 1) throw std::invalid_argument("expected power sums p_0..p_2n");
  std::vector<ChernPolynomial> e(top + 1, ChernPolynomial(n_));
  e[0] = ChernPolynomial::constant(n_, Rational(1));
  // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
  for (unsigned k = 1; k <= top; ++k) {
    ChernPolynomial acc(n_);
    for (unsigned i = 1; i <= k; ++i) acc += Rational(i % 2 ? 1 : -1) * (e[k - i] * p[i]);
    e[k] = Rational(1, static_cast<long>(k)) * acc;
  }
  return e;
}

ChernPolynomial s_from_c(unsigned k, const SymFuncContext& ctx) { return ctx.s(k); }

namespace {

// -factor * sum_k b_2k s_2k
ChernPolynomial bernoulli_exponent(const SymFuncContext& ctx, const Rational& factor) {
  ChernPolynomial x(ctx.n());
  for (unsigned k = 1; k <= ctx.n(); ++k) x += (-factor * modified_bernoulli(2 * k)) * ctx.s(2 * k);
  return x;
}

}  // namespace

ChernPolynomial todd_symplectic(const SymFuncContext& ctx) { return exp(bernoulli_exponent(ctx, Rational(2))); }

ChernPolynomial sqrt_todd(const SymFuncContext& ctx) { return exp(bernoulli_exponent(ctx, Rational(1))); }

LambdaSeries todd_deformed(const SymFuncContext& ctx) {
  LambdaSeries x("lambda", ctx.n());
  for (unsigned k = 1; k <= ctx.n(); ++k) {
    const ChernPolynomial t = (Rational(-2) * modified_bernoulli(2 * k)) * ctx.s(2 * k);
    const Polynomial1 cheb = chebyshev_even_lambda(k);
    for (int j = 0; j <= cheb.degree(); ++j) x.add(static_cast<unsigned>(j), cheb.coeff(static_cast<unsigned>(j)) * t);
  }
  return exp(x);
}

YPolynomial chi_y_integrand(const SymFuncContext& ctx) {
  const unsigned n = ctx.n(), top = 2 * n;
  // P_m = sum_i e^{-m x_i} = 2n + sum_k (-m)^k s_k / k!
  std::vector<ChernPolynomial> power_sums(top + 1, ChernPolynomial(n));
  for (unsigned m = 1; m <= top; ++m) {
    ChernPolynomial pm = ChernPolynomial::constant(n, Rational(top));
    Rational scale(1);
    for (unsigned k = 1; k <= top; ++k) {
      scale *= Rational(-static_cast<long>(m), static_cast<long>(k));
      pm += scale * ctx.s(k);
    }
    power_sums[m] = std::move(pm);
  }
  // prod_i (1 + y e^{-x_i}) = sum_p y^p e_p(e^{-x_1}, ...)
  const auto e = ctx.elementary_from_power_sums(power_sums);
  const ChernPolynomial td = todd_symplectic(ctx);
  YPolynomial out("y", n);
  for (unsigned p = 0; p <= top; ++p) out.add(p, td * e[p]);
  return out;
}

ChernPolynomial genus_from_series(const PowerSeries& q, const SymFuncContext& ctx) {
  const unsigned top = 2 * ctx.n();
  if (q.order() <= top) throw std::invalid_argument("genus_from_series: series known only below x^" + std::to_string(q.order()));
  if (!q[0].is_one()) throw std::invalid_argument("genus_from_series: Q(0) must be 1");
  const PowerSeries l = PowerSeries(top + 1, std::vector<Rational>(q.coeffs().begin(), q.coeffs().begin() + top + 1)).log();
  ChernPolynomial x(ctx.n());
  for (unsigned k = 1; k <= top; ++k) x += l[k] * ctx.s(k);
  return exp(x);
}

Rational integrate(const ChernPolynomial& p, const ChernNumbers& values) {
  Rational out;
  for (const auto& [e, c] : p.terms()) {
    if (ChernPolynomial::weight(e) != p.max_weight()) continue;
    const auto it = values.find(e);
    if (it == values.end()) throw std::invalid_argument("no Chern number given for " + monomial_name(e));
    out += c * it->second;
  }
  return out;
}

Polynomial1 integrate(const ChernCoeffPolynomial& p, const ChernNumbers& values) {
  std::vector<Rational> coeffs;
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(integrate(p.coeff(static_cast<unsigned>(k)), values));
  return Polynomial1(p.var(), std::move(coeffs));
}

}  // namespace hrr
