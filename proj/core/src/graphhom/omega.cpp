#include "hrr/graphhom/omega.hpp"

#include "hrr/arith/sequences.hpp"

namespace hrr::graphhom {

namespace {

std::string pair_label(const std::string& op, const CanonicalDiagram& a, const CanonicalDiagram& b) {
  return op + "([" + a.code() + "], [" + b.code() + "])";
}

IdentityCheck compare(std::string label, const GraphVector& lhs, const GraphVector& rhs, BasisRegistry* registry) {
  GraphVector diff = lhs - rhs;
  if (registry) diff = registry->reduce(diff);
  return {std::move(label), diff.is_zero(), diff.is_zero() ? std::string() : diff.str()};
}

}  // namespace

MuSeries omega_mu(unsigned max_mu_power) {
  // Omega_m = (1/m) sum_j j X_j Omega_{m-j} with X_2k = b_2k w_2k.
  MuSeries x;
  for (unsigned j = 2; j <= max_mu_power; j += 2) x[j] = GraphVector(wheel(j), modified_bernoulli(j));
  MuSeries omega;
  omega[0] = GraphVector::one();
  for (unsigned m = 1; m <= max_mu_power; ++m) {
    GraphVector acc;
    for (unsigned j = 2; j <= m; j += 2) {
      const auto prev = omega.find(m - j);
      if (prev == omega.end()) continue;
      GraphVector term = disjoint_union(x.at(j), prev->second);
      term *= Rational(static_cast<long>(j), static_cast<long>(m));
      acc += term;
    }
    if (!acc.is_zero()) omega[m] = std::move(acc);
  }
  return omega;
}

std::vector<OmegaSlice> verify_omega_eigen(unsigned max_degree, BasisRegistry& registry) {
  // The mu^m slice lives in bidegree (m - 2, m), of total degree 2m - 2.
  const unsigned max_mu = (max_degree + 2) / 2;
  const MuSeries omega = omega_mu(max_mu);
  const GraphVector theta(theta_diagram(), Rational(1, 48));
  std::vector<OmegaSlice> out;
  for (unsigned m = 2; m <= max_mu; m += 2) {
    GraphVector lhs;
    if (auto it = omega.find(m); it != omega.end()) lhs = partial(it->second);
    if (auto it = omega.find(m - 2); it != omega.end()) lhs -= disjoint_union(theta, it->second);
    OmegaSlice s;
    s.mu_power = m;
    s.bidegree = {m - 2, m};
    const QuotientBasis& q = registry.get(s.bidegree);
    s.defect = q.reduce(lhs);
    s.coordinates = q.coordinates(lhs);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<IdentityCheck> verify_wheel_partial(unsigned max_k) {
  std::vector<IdentityCheck> out;
  for (unsigned k = 1; k <= max_k; ++k) {
    GraphVector rhs;
    for (unsigned m = 0; m <= 2 * k - 2; ++m) rhs.add(double_wheel(m, 2 * k - 2 - m), Rational(k));
    out.push_back(compare("partial w" + std::to_string(2 * k), partial(GraphVector(wheel(2 * k))), rhs, nullptr));
  }
  return out;
}

std::vector<IdentityCheck> verify_wheel_bilinear(unsigned max_sum, BasisRegistry& registry) {
  std::vector<IdentityCheck> out;
  for (unsigned i = 1; i < max_sum; ++i)
    for (unsigned j = 1; i + j <= max_sum; ++j) {
      const GraphVector lhs = partial_bilinear(GraphVector(wheel(2 * i)), GraphVector(wheel(2 * j)));
      const GraphVector rhs(double_wheel(2 * i - 1, 2 * j - 1), Rational(static_cast<long>(8 * i * j)));
      out.push_back(compare("partial(w" + std::to_string(2 * i) + ", w" + std::to_string(2 * j) + ")", lhs, rhs,
                            &registry));
    }
  return out;
}

std::vector<IdentityCheck> verify_power_rule(unsigned max_n) {
  const GraphVector g(wheel(2));
  const GraphVector dg = partial(g);
  const GraphVector dgg = partial_bilinear(g, g);
  std::vector<IdentityCheck> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    GraphVector rhs = Rational(n) * disjoint_union(dg, power(g, n - 1));
    if (n >= 2) rhs += binomial(Rational(n), 2) * disjoint_union(dgg, power(g, n - 2));
    out.push_back(compare("partial(w2^" + std::to_string(n) + ")", partial(power(g, n)), rhs, nullptr));
  }
  return out;
}

std::vector<CanonicalDiagram> ell_free_basis(unsigned max_total, BasisRegistry& registry) {
  std::vector<CanonicalDiagram> out;
  for (unsigned total = 0; total <= max_total; total += 2)
    for (unsigned u = 0; u <= total; u += 2)
      for (const auto& d : registry.get({u, total - u}).basis())
        if (d.ell_components() == 0) out.push_back(d);
  return out;
}

std::vector<IdentityCheck> verify_ell_partial(unsigned max_total, BasisRegistry& registry) {
  const auto basis = ell_free_basis(max_total, registry);
  const GraphVector half_ell(ell_diagram(), Rational(1, 2));
  std::vector<IdentityCheck> out;
  for (const auto& a : basis) {
    if (a.univalent() < 2) continue;
    for (const auto& b : basis) {
      if (b.univalent() + 2 != a.univalent() || a.degree() + b.degree() > max_total) continue;
      const GraphVector g = GraphVector::basis(a), h = GraphVector::basis(b);
      out.push_back(compare(pair_label("ell-partial", a, b), pairing(g, disjoint_union(half_ell, h)),
                            pairing(partial(g), h), &registry));
    }
  }
  return out;
}

std::vector<IdentityCheck> verify_scp_partial(unsigned max_total, BasisRegistry& registry) {
  const auto basis = ell_free_basis(max_total, registry);
  std::vector<IdentityCheck> out;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.degree() + b.degree() > max_total) continue;
      const GraphVector g = GraphVector::basis(a), h = GraphVector::basis(b);
      const GraphVector lhs = pairing(exp_partial(disjoint_union(g, h)), GraphVector::one());
      const GraphVector rhs = pairing(exp_partial(g), exp_partial(h));
      out.push_back(compare(pair_label("scp-partial", a, b), lhs, rhs, &registry));
    }
  return out;
}

}  // namespace hrr::graphhom
