#ifndef HRR_GRAPHHOM_GRAPH_VECTOR_HPP
#define HRR_GRAPHHOM_GRAPH_VECTOR_HPP

#include <compare>
#include <map>
#include <set>
#include <string>

#include "hrr/arith/rational.hpp"
#include "hrr/graphhom/canonical.hpp"

namespace hrr::graphhom {

// (univalent count, trivalent count).
struct Bidegree {
  unsigned legs = 0;
  unsigned trivalent = 0;

  unsigned total() const { return legs + trivalent; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

Bidegree bidegree_of(const CanonicalDiagram& d);

// A rational combination of diagrams modulo AS. Zero coefficients and
// diagrams that vanish by AS are never stored.
class GraphVector {
public:
  using Terms = std::map<CanonicalDiagram, Rational>;

  GraphVector() = default;
  explicit GraphVector(const JacobiDiagram& d, const Rational& coeff = Rational(1));

  static GraphVector one() { return GraphVector(empty_diagram()); }
  static GraphVector basis(const CanonicalDiagram& d);

  void add(const CanonicalDiagram& d, const Rational& coeff);
  void add(const JacobiDiagram& d, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const CanonicalDiagram& d) const;

  std::set<Bidegree> bidegrees() const;
  GraphVector homogeneous_part(Bidegree b) const;
  bool has_ell_component() const;

  GraphVector& operator+=(const GraphVector& o);
  GraphVector& operator-=(const GraphVector& o);
  GraphVector& operator*=(const Rational& c);
  friend GraphVector operator+(GraphVector a, const GraphVector& b) { return a += b; }
  friend GraphVector operator-(GraphVector a, const GraphVector& b) { return a -= b; }
  friend GraphVector operator-(GraphVector a) { return a *= Rational(-1); }
  friend GraphVector operator*(const Rational& c, GraphVector a) { return a *= c; }
  friend bool operator==(const GraphVector&, const GraphVector&) = default;

  std::string str() const;

private:
  Terms terms_;
};

// Bilinear extension of the disjoint union; the empty diagram is the unit.
GraphVector disjoint_union(const GraphVector& a, const GraphVector& b);
GraphVector power(const GraphVector& g, unsigned n);

// Sum over unordered pairs of distinct legs of the glued diagram. Throws
// DiagramError on terms with an ell component.
GraphVector partial(const GraphVector& g);
// Sum over all glueings of one leg of g with one leg of h.
GraphVector partial_bilinear(const GraphVector& g, const GraphVector& h);
// exp(partial) g, a finite sum.
GraphVector exp_partial(const GraphVector& g);

// Sum over bijections between the legs of g and h of the fully glued
// diagram; zero when the leg counts differ. Throws DiagramError if both
// sides have ell components.
GraphVector pairing(const GraphVector& g, const GraphVector& h);

}  // namespace hrr::graphhom

#endif  // HRR_GRAPHHOM_GRAPH_VECTOR_HPP
