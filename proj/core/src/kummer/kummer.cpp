#include "hrr/kummer/kummer.hpp"

namespace hrr {

namespace {

void check_n(unsigned n) {
  if (n == 0 || n > kummer_max_n)
    throw std::out_of_range("n must lie in 1.." + std::to_string(kummer_max_n) + ", got " + std::to_string(n));
}

}  // namespace

Rational kummer_euler_q(unsigned n, const Rational& q) {
  return Rational(n + 1) * binomial(q / Rational(2) + Rational(n), n);
}

Polynomial1 kummer_euler_lambda(unsigned n) {
  Polynomial1 p = Polynomial1::constant("lambda", Rational(n + 1) / factorial(n));
  for (unsigned i = 1; i <= n; ++i) p = p * Polynomial1("lambda", {Rational(i), Rational(n + 1, 4)});
  return p;
}

Polynomial1 chi_y_kummer(unsigned n) {
  if (n == 0) throw std::out_of_range("n must be positive");
  const unsigned m = n + 1;
  Polynomial1 out("y");
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d) continue;
    std::vector<Rational> alternating;
    for (unsigned i = 0; i < m / d; ++i) alternating.push_back(Rational(i % 2 ? -1 : 1));
    const Polynomial1 a("y", alternating);
    const unsigned shift = m - m / d;
    const Polynomial1 tail = Polynomial1::monomial("y", shift, Rational(shift % 2 ? -1 : 1));
    out += Rational(d * d * d) * (a * a * tail);
  }
  return Rational(m) * out;
}

Rational chi_symmetric_power(const Rational& chi, unsigned n) {
  return binomial(chi + Rational(n) - Rational(1), n);
}

std::string RelationRow::label() const {
  return (source == RelationSource::LambdaCoefficient ? "lambda^" : "y^") + std::to_string(index);
}

QMatrix RelationSystem::matrix() const {
  QMatrix a;
  for (const auto& r : rows) a.append_row(r.coeffs);
  return a;
}

std::vector<Rational> RelationSystem::rhs() const {
  std::vector<Rational> b;
  for (const auto& r : rows) b.push_back(r.rhs);
  return b;
}

Rational RelationSystem::residual(const RelationRow& row, const ChernNumbers& values) const {
  Rational s = -row.rhs;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const auto it = values.find(unknowns[k]);
    if (it == values.end()) throw std::invalid_argument("no value for " + monomial_name(unknowns[k]));
    s += row.coeffs[k] * it->second;
  }
  return s;
}

RelationSystem build_relations(unsigned n) {
  check_n(n);
  RelationSystem sys;
  sys.n = n;
  sys.unknowns = monomials_of_weight(n, 2 * n);
  const SymFuncContext ctx(n);
  const auto row_of = [&](const ChernPolynomial& p) {
    std::vector<Rational> coeffs;
    for (const auto& e : sys.unknowns) coeffs.push_back(p.coefficient(e));
    return coeffs;
  };
  const LambdaSeries td = todd_deformed(ctx).weight_part(2 * n);
  const Polynomial1 euler = kummer_euler_lambda(n);
  for (unsigned j = 0; j <= n; ++j)
    sys.rows.push_back({RelationSource::LambdaCoefficient, j, row_of(td.coeff(j)), euler.coeff(j)});
  const YPolynomial chi = chi_y_integrand(ctx).weight_part(2 * n);
  const Polynomial1 hodge = chi_y_kummer(n);
  for (unsigned p = 0; p <= n; ++p)
    sys.rows.push_back({RelationSource::ChiYCoefficient, p, row_of(chi.coeff(p)), hodge.coeff(p)});
  return sys;
}

ChernNumberTable solve_chern_numbers(unsigned n) {
  const RelationSystem sys = build_relations(n);
  const SolveResult r = rref_solve(sys.matrix(), sys.rhs());
  ChernNumberTable t;
  t.n = n;
  t.rank = r.rank;
  t.unknowns = sys.unknowns.size();
  t.kind = r.kind;
  if (r.kind == SolveKind::Inconsistent)
    throw KummerSolveError("relation system for n = " + std::to_string(n) + " is inconsistent");
  if (r.kind == SolveKind::Unique) {
    for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
      if (!r.solution[k].is_integer())
        throw KummerSolveError("Chern number " + monomial_name(sys.unknowns[k]) + " = " + r.solution[k].str() +
                               " is not an integer");
      t.values.emplace(sys.unknowns[k], r.solution[k]);
    }
  }
  return t;
}

}  // namespace hrr
