#ifndef HRR_GRAPHHOM_DIAGRAM_HPP
#define HRR_GRAPHHOM_DIAGRAM_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hrr::graphhom {

struct DiagramError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A Jacobi diagram at the level of flags (half-edges). Every vertex owns one
// flag (univalent, a "leg") or three flags listed in their cyclic order
// (trivalent). Every flag is matched with exactly one partner flag by an
// edge. Vertex and flag ids are dense indices.
class JacobiDiagram {
public:
  JacobiDiagram() = default;

  // Builders. Flags are returned so callers can wire edges with connect().
  std::array<int, 3> add_trivalent();
  int add_univalent();
  void connect(int flag_a, int flag_b);

  std::size_t flag_count() const { return partner_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t trivalent_count() const;
  std::size_t univalent_count() const;
  std::size_t degree() const { return vertices_.size(); }

  int partner(int flag) const { return partner_[static_cast<std::size_t>(flag)]; }
  int vertex_of(int flag) const { return vertex_of_[static_cast<std::size_t>(flag)]; }
  std::span<const int> flags(int vertex) const { return vertices_[static_cast<std::size_t>(vertex)]; }
  bool is_univalent(int vertex) const { return flags(vertex).size() == 1; }

  // Univalent vertices in increasing id order.
  std::vector<int> legs() const;
  // True if some component is a single edge between two univalent vertices.
  bool has_ell_component() const;

  // Throws DiagramError if flags are unmatched or vertices malformed.
  void validate() const;

  // Reverses the cyclic order at one trivalent vertex.
  void flip(int vertex);

private:
  friend JacobiDiagram disjoint_union(const JacobiDiagram&, const JacobiDiagram&);
  friend JacobiDiagram glue_all(const JacobiDiagram&, std::span<const std::pair<int, int>>);

  std::vector<int> partner_;
  std::vector<int> vertex_of_;
  std::vector<std::vector<int>> vertices_;
};

JacobiDiagram disjoint_union(const JacobiDiagram& a, const JacobiDiagram& b);

// Glues the univalent vertices u and u2: both are removed together with their
// edges and a new edge joins the vertices they were attached to. The flags
// at those vertices keep their place in the cyclic order. Throws DiagramError
// if u == u2, either is not univalent, or u and u2 are the two ends of one
// ell component.
JacobiDiagram glue(const JacobiDiagram& d, int u, int u2);

// Performs several glueings in sequence (vertex ids refer to d).
JacobiDiagram glue_all(const JacobiDiagram& d, std::span<const std::pair<int, int>> pairs);

// Standard diagrams. Legs point out of the rim and the rim vertices carry the
// counter-clockwise order of the planar picture.
JacobiDiagram empty_diagram();
JacobiDiagram ell_diagram();
JacobiDiagram theta_diagram();
// The 2k-wheel: a rim of 2k trivalent vertices, one leg at each.
JacobiDiagram wheel(unsigned legs);
// The double wheel: a theta graph drawn as a circle with an inner chord,
// `upper` legs on one arc and `lower` legs on the other.
JacobiDiagram double_wheel(unsigned upper, unsigned lower);

}  // namespace hrr::graphhom

#endif  // HRR_GRAPHHOM_DIAGRAM_HPP
