#ifndef HRR_GRAPHHOM_CANONICAL_HPP
#define HRR_GRAPHHOM_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "hrr/graphhom/diagram.hpp"

namespace hrr::graphhom {

// Canonical encoding of the isomorphism class of a Jacobi diagram with its
// orientation fixed by a reference labeling (see to_diagram). The code is
//
//   "<t>,<u>,<l>;<leg flags>;<adjacency rows>"
//
// t trivalent vertices, u univalent vertices, l ell components; one digit per
// trivalent vertex telling whether it carries a leg; then the strictly lower
// triangle of the edge-multiplicity matrix between trivalent vertices, rows
// separated by '/'.
class CanonicalDiagram {
public:
  CanonicalDiagram() = default;
  // Throws DiagramError on a malformed code.
  explicit CanonicalDiagram(std::string code);

  const std::string& code() const { return code_; }
  unsigned trivalent() const { return trivalent_; }
  unsigned univalent() const { return univalent_; }
  unsigned ell_components() const { return ell_; }
  unsigned degree() const { return trivalent_ + univalent_; }
  bool is_trivalent_diagram() const { return univalent_ == 0; }

  // The reference diagram this class stands for: canonicalize(to_diagram())
  // returns this class with sign +1.
  JacobiDiagram to_diagram() const;

  friend bool operator==(const CanonicalDiagram& a, const CanonicalDiagram& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const CanonicalDiagram& a, const CanonicalDiagram& b) {
    return a.code_ <=> b.code_;
  }

private:
  std::string code_;
  unsigned trivalent_ = 0;
  unsigned univalent_ = 0;
  unsigned ell_ = 0;
};

struct CanonicalForm {
  CanonicalDiagram diagram;  // meaningless when sign == 0
  int sign = 0;              // d = sign * diagram in the AS quotient
};

// Builds the diagram with trivalent vertices 0..t-1 (legs[i] is 0 or 1),
// the given symmetric loop-free edge multiplicities and `ell` extra ell
// components. At each vertex the flags are ordered leg first, then edges by
// neighbour index; parallel edges are matched in order.
JacobiDiagram diagram_from_adjacency(const std::vector<int>& legs, const std::vector<std::vector<int>>& adj,
                                     unsigned ell);

// Canonical representative of d together with the orientation sign relating
// d to it. The sign is 0 exactly when d has an orientation-reversing
// automorphism (self-loops, two legs on one vertex, mirror symmetries, ...),
// in which case d vanishes by AS.
CanonicalForm canonicalize(const JacobiDiagram& d);

}  // namespace hrr::graphhom

template <>
struct std::hash<hrr::graphhom::CanonicalDiagram> {
  std::size_t operator()(const hrr::graphhom::CanonicalDiagram& d) const {
    return std::hash<std::string>()(d.code());
  }
};

#endif  // HRR_GRAPHHOM_CANONICAL_HPP
