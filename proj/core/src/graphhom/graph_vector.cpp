#include "hrr/graphhom/graph_vector.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hrr::graphhom {

Bidegree bidegree_of(const CanonicalDiagram& d) { return {d.univalent(), d.trivalent()}; }

GraphVector::GraphVector(const JacobiDiagram& d, const Rational& coeff) { add(d, coeff); }

GraphVector GraphVector::basis(const CanonicalDiagram& d) {
  GraphVector g;
  g.add(d, Rational(1));
  return g;
}

void GraphVector::add(const CanonicalDiagram& d, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void GraphVector::add(const JacobiDiagram& d, const Rational& coeff) {
  const CanonicalForm c = canonicalize(d);
  if (c.sign != 0) add(c.diagram, c.sign > 0 ? coeff : -coeff);
}

Rational GraphVector::coefficient(const CanonicalDiagram& d) const {
  const auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Bidegree> GraphVector::bidegrees() const {
  std::set<Bidegree> out;
  for (const auto& [d, c] : terms_) out.insert(bidegree_of(d));
  return out;
}

GraphVector GraphVector::homogeneous_part(Bidegree b) const {
  GraphVector out;
  for (const auto& [d, c] : terms_)
    if (bidegree_of(d) == b) out.terms_.emplace(d, c);
  return out;
}

bool GraphVector::has_ell_component() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.ell_components() > 0; });
}

GraphVector& GraphVector::operator+=(const GraphVector& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

GraphVector& GraphVector::operator-=(const GraphVector& o) {
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

GraphVector& GraphVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, x] : terms_) x *= c;
  return *this;
}

std::string GraphVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << "*[" << d.code() << "]";
  }
  return out.str();
}

GraphVector disjoint_union(const GraphVector& a, const GraphVector& b) {
  GraphVector out;
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) out.add(disjoint_union(da.to_diagram(), db.to_diagram()), ca * cb);
  return out;
}

GraphVector power(const GraphVector& g, unsigned n) {
  GraphVector out = GraphVector::one();
  for (unsigned i = 0; i < n; ++i) out = disjoint_union(out, g);
  return out;
}

namespace {

void require_no_ell(const JacobiDiagram& d, const char* op) {
  if (d.has_ell_component()) throw DiagramError(std::string(op) + ": argument has an ell component");
}

}  // namespace

GraphVector partial(const GraphVector& g) {
  GraphVector out;
  for (const auto& [cd, c] : g.terms()) {
    const JacobiDiagram d = cd.to_diagram();
    require_no_ell(d, "partial");
    const auto legs = d.legs();
    for (std::size_t i = 0; i < legs.size(); ++i)
      for (std::size_t j = i + 1; j < legs.size(); ++j) out.add(glue(d, legs[i], legs[j]), c);
  }
  return out;
}

GraphVector partial_bilinear(const GraphVector& g, const GraphVector& h) {
  GraphVector out;
  for (const auto& [cg, a] : g.terms()) {
    const JacobiDiagram dg = cg.to_diagram();
    require_no_ell(dg, "partial");
    for (const auto& [ch, b] : h.terms()) {
      const JacobiDiagram dh = ch.to_diagram();
      require_no_ell(dh, "partial");
      const JacobiDiagram u = disjoint_union(dg, dh);
      const int shift = static_cast<int>(dg.vertex_count());
      for (int x : dg.legs())
        for (int y : dh.legs()) out.add(glue(u, x, y + shift), a * b);
    }
  }
  return out;
}

GraphVector exp_partial(const GraphVector& g) {
  GraphVector out = g;
  GraphVector term = g;
  for (unsigned k = 1; !term.is_zero(); ++k) {
    term = partial(term);
    term *= Rational(1, static_cast<long>(k));
    out += term;
  }
  return out;
}

GraphVector pairing(const GraphVector& g, const GraphVector& h) {
  GraphVector out;
  for (const auto& [cg, a] : g.terms()) {
    for (const auto& [ch, b] : h.terms()) {
      if (cg.univalent() != ch.univalent()) continue;
      if (cg.ell_components() > 0 && ch.ell_components() > 0)
        throw DiagramError("pairing: both arguments have ell components");
      const JacobiDiagram dg = cg.to_diagram();
      const JacobiDiagram u = disjoint_union(dg, ch.to_diagram());
      const auto legs = u.legs();
      const std::size_t n = cg.univalent();
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::pair<int, int>> pairs(n);
      do {
        for (std::size_t i = 0; i < n; ++i) pairs[i] = {legs[i], legs[n + perm[i]]};
        out.add(glue_all(u, pairs), a * b);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

}  // namespace hrr::graphhom
