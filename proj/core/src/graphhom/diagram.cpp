#include "hrr/graphhom/diagram.hpp"

#include <algorithm>
#include <string>

namespace hrr::graphhom {

std::array<int, 3> JacobiDiagram::add_trivalent() {
  const int v = static_cast<int>(vertices_.size());
  const int f = static_cast<int>(partner_.size());
  vertices_.push_back({f, f + 1, f + 2});
  for (int i = 0; i < 3; ++i) {
    partner_.push_back(-1);
    vertex_of_.push_back(v);
  }
  return {f, f + 1, f + 2};
}

int JacobiDiagram::add_univalent() {
  const int v = static_cast<int>(vertices_.size());
  const int f = static_cast<int>(partner_.size());
  vertices_.push_back({f});
  partner_.push_back(-1);
  vertex_of_.push_back(v);
  return f;
}

void JacobiDiagram::connect(int a, int b) {
  if (a == b) throw DiagramError("connect: a flag cannot be its own partner");
  auto& pa = partner_.at(static_cast<std::size_t>(a));
  auto& pb = partner_.at(static_cast<std::size_t>(b));
  if (pa != -1 || pb != -1) throw DiagramError("connect: flag already matched");
  pa = b;
  pb = a;
}

std::size_t JacobiDiagram::trivalent_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const auto& v) { return v.size() == 3; }));
}

std::size_t JacobiDiagram::univalent_count() const { return vertices_.size() - trivalent_count(); }

std::vector<int> JacobiDiagram::legs() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].size() == 1) out.push_back(static_cast<int>(v));
  return out;
}

bool JacobiDiagram::has_ell_component() const {
  for (int u : legs())
    if (is_univalent(vertex_of(partner(flags(u)[0])))) return true;
  return false;
}

void JacobiDiagram::validate() const {
  for (std::size_t f = 0; f < partner_.size(); ++f) {
    const int p = partner_[f];
    if (p < 0 || static_cast<std::size_t>(p) >= partner_.size() || partner_[static_cast<std::size_t>(p)] != static_cast<int>(f))
      throw DiagramError("diagram: flag " + std::to_string(f) + " is not matched");
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].size() != 1 && vertices_[v].size() != 3)
      throw DiagramError("diagram: vertex " + std::to_string(v) + " is neither uni- nor trivalent");
    for (int f : vertices_[v])
      if (vertex_of_[static_cast<std::size_t>(f)] != static_cast<int>(v))
        throw DiagramError("diagram: inconsistent flag ownership");
  }
}

void JacobiDiagram::flip(int vertex) {
  auto& fs = vertices_.at(static_cast<std::size_t>(vertex));
  if (fs.size() != 3) throw DiagramError("flip: vertex is not trivalent");
  std::swap(fs[1], fs[2]);
}

JacobiDiagram disjoint_union(const JacobiDiagram& a, const JacobiDiagram& b) {
  JacobiDiagram out = a;
  const int fo = static_cast<int>(a.partner_.size());
  const int vo = static_cast<int>(a.vertices_.size());
  for (int p : b.partner_) out.partner_.push_back(p + fo);
  for (int v : b.vertex_of_) out.vertex_of_.push_back(v + vo);
  for (const auto& fs : b.vertices_) {
    std::vector<int> shifted(fs);
    for (int& f : shifted) f += fo;
    out.vertices_.push_back(std::move(shifted));
  }
  return out;
}

JacobiDiagram glue_all(const JacobiDiagram& d, std::span<const std::pair<int, int>> pairs) {
  std::vector<int> partner = d.partner_;
  std::vector<bool> removed_vertex(d.vertices_.size(), false);
  for (const auto& [u, w] : pairs) {
    if (u == w) throw DiagramError("glue: cannot glue a vertex to itself");
    for (int x : {u, w}) {
      if (x < 0 || static_cast<std::size_t>(x) >= d.vertices_.size() || !d.is_univalent(x) ||
          removed_vertex[static_cast<std::size_t>(x)])
        throw DiagramError("glue: argument is not an available univalent vertex");
    }
    const int fu = d.vertices_[static_cast<std::size_t>(u)][0];
    const int fw = d.vertices_[static_cast<std::size_t>(w)][0];
    const int a = partner[static_cast<std::size_t>(fu)];
    const int b = partner[static_cast<std::size_t>(fw)];
    if (a == fw) throw DiagramError("glue: the two univalent vertices of an ell component");
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
    removed_vertex[static_cast<std::size_t>(u)] = removed_vertex[static_cast<std::size_t>(w)] = true;
  }

  // Compact the surviving vertices and flags, keeping their relative order.
  JacobiDiagram out;
  std::vector<int> flag_map(d.partner_.size(), -1);
  for (std::size_t v = 0; v < d.vertices_.size(); ++v) {
    if (removed_vertex[v]) continue;
    const int nv = static_cast<int>(out.vertices_.size());
    std::vector<int> fs;
    for (int f : d.vertices_[v]) {
      flag_map[static_cast<std::size_t>(f)] = static_cast<int>(out.vertex_of_.size());
      fs.push_back(static_cast<int>(out.vertex_of_.size()));
      out.vertex_of_.push_back(nv);
    }
    out.vertices_.push_back(std::move(fs));
  }
  out.partner_.assign(out.vertex_of_.size(), -1);
  for (std::size_t f = 0; f < d.partner_.size(); ++f)
    if (flag_map[f] >= 0)
      out.partner_[static_cast<std::size_t>(flag_map[f])] = flag_map[static_cast<std::size_t>(partner[f])];
  return out;
}

JacobiDiagram glue(const JacobiDiagram& d, int u, int u2) {
  const std::pair<int, int> p{u, u2};
  return glue_all(d, std::span(&p, 1));
}

JacobiDiagram empty_diagram() { return {}; }

JacobiDiagram ell_diagram() {
  JacobiDiagram d;
  d.connect(d.add_univalent(), d.add_univalent());
  return d;
}

JacobiDiagram theta_diagram() { return double_wheel(0, 0); }

JacobiDiagram wheel(unsigned legs) {
  if (legs == 0) return empty_diagram();
  // Rim vertex i: (leg, next, prev) counter-clockwise with the leg outside.
  JacobiDiagram d;
  std::vector<std::array<int, 3>> rim;
  for (unsigned i = 0; i < legs; ++i) rim.push_back(d.add_trivalent());
  for (unsigned i = 0; i < legs; ++i) {
    d.connect(rim[i][0], d.add_univalent());
    d.connect(rim[i][1], rim[(i + 1) % legs][2]);
  }
  return d;
}

JacobiDiagram double_wheel(unsigned upper, unsigned lower) {
  // Circle traversed counter-clockwise: chord end A, `upper` leg vertices,
  // chord end B, `lower` leg vertices. Leg vertices carry (out, next, prev);
  // chord ends carry (in, prev, next), the chord lying inside the circle.
  JacobiDiagram d;
  const unsigned n = upper + lower + 2;
  std::vector<int> next(n), prev(n), spoke(n);
  for (unsigned i = 0; i < n; ++i) {
    const auto f = d.add_trivalent();
    const bool chord_end = (i == 0 || i == upper + 1);
    spoke[i] = f[0];
    next[i] = chord_end ? f[2] : f[1];
    prev[i] = chord_end ? f[1] : f[2];
  }
  for (unsigned i = 0; i < n; ++i) d.connect(next[i], prev[(i + 1) % n]);
  d.connect(spoke[0], spoke[upper + 1]);
  for (unsigned i = 0; i < n; ++i)
    if (i != 0 && i != upper + 1) d.connect(spoke[i], d.add_univalent());
  return d;
}

}  // namespace hrr::graphhom
