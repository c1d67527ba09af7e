#include "hrr/graphhom/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

namespace hrr::graphhom {

namespace {

// Trivalent skeleton of a diagram: legs become vertex labels, ell components
// are only counted.
struct Skeleton {
  std::vector<int> vertex_id;  // trivalent index -> diagram vertex
  std::vector<int> index_of;   // diagram vertex -> trivalent index or -1
  std::vector<int> legs;
  std::vector<std::vector<int>> adj;  // multiplicities; diagonal counts loop flags
  unsigned univalent = 0;
  unsigned ell = 0;

  int size() const { return static_cast<int>(vertex_id.size()); }
};

Skeleton skeleton_of(const JacobiDiagram& d) {
  Skeleton s;
  s.index_of.assign(d.vertex_count(), -1);
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (d.is_univalent(static_cast<int>(v))) {
      ++s.univalent;
      if (d.is_univalent(d.vertex_of(d.partner(d.flags(static_cast<int>(v))[0])))) ++s.ell;
      continue;
    }
    s.index_of[v] = s.size();
    s.vertex_id.push_back(static_cast<int>(v));
  }
  s.ell /= 2;
  const int t = s.size();
  s.legs.assign(static_cast<std::size_t>(t), 0);
  s.adj.assign(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(t), 0));
  for (int i = 0; i < t; ++i)
    for (int f : d.flags(s.vertex_id[static_cast<std::size_t>(i)])) {
      const int w = d.vertex_of(d.partner(f));
      if (d.is_univalent(w))
        ++s.legs[static_cast<std::size_t>(i)];
      else
        ++s.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(s.index_of[static_cast<std::size_t>(w)])];
    }
  return s;
}

// Colour refinement: colours are canonical ranks of (old colour, multiset of
// (neighbour colour, multiplicity)).
std::vector<int> refine(const Skeleton& s, std::vector<int> colour) {
  const int t = s.size();
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(static_cast<std::size_t>(t));
    for (int v = 0; v < t; ++v) {
      auto& [c, nb] = sig[static_cast<std::size_t>(v)];
      c = colour[static_cast<std::size_t>(v)];
      for (int w = 0; w < t; ++w) {
        const int m = s.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        if (m > 0 && w != v) nb.emplace_back(colour[static_cast<std::size_t>(w)], m);
      }
      std::sort(nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < t; ++v)
      colour[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
    const int now = static_cast<int>(sorted.size());
    if (now == classes) return colour;
    classes = now;
  }
}

// Search over labelings produced by individualisation and refinement; keeps
// every labeling attaining the lexicographically smallest encoding.
class LabelSearch {
public:
  explicit LabelSearch(const Skeleton& s) : s_(s), base_(refine(s, s.legs)) {}

  void run() {
    placed_.assign(static_cast<std::size_t>(s_.size()), false);
    descend();
  }

  const std::vector<int>& best_encoding() const { return best_; }
  const std::vector<std::vector<int>>& best_orders() const { return best_orders_; }

private:
  void descend() {
    const int t = s_.size();
    const int p = static_cast<int>(order_.size());
    if (p == t) {
      const int c = have_best_ ? compare_prefix() : -1;
      if (c < 0) {
        best_ = current_;
        best_orders_.assign(1, order_);
        have_best_ = true;
      } else if (c == 0) {
        best_orders_.push_back(order_);
      }
      return;
    }
    std::vector<int> colour(static_cast<std::size_t>(t));
    for (int v = 0; v < t; ++v) colour[static_cast<std::size_t>(v)] = t + base_[static_cast<std::size_t>(v)];
    for (int q = 0; q < p; ++q) colour[static_cast<std::size_t>(order_[static_cast<std::size_t>(q)])] = q;
    colour = refine(s_, std::move(colour));
    int target = -1;
    for (int v = 0; v < t; ++v)
      if (!placed_[static_cast<std::size_t>(v)] && (target < 0 || colour[static_cast<std::size_t>(v)] < target))
        target = colour[static_cast<std::size_t>(v)];
    for (int v = 0; v < t; ++v) {
      if (placed_[static_cast<std::size_t>(v)] || colour[static_cast<std::size_t>(v)] != target) continue;
      const std::size_t mark = current_.size();
      current_.push_back(s_.legs[static_cast<std::size_t>(v)]);
      for (int q = 0; q < p; ++q)
        current_.push_back(s_.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(order_[static_cast<std::size_t>(q)])]);
      if (!have_best_ || compare_prefix() <= 0) {
        order_.push_back(v);
        placed_[static_cast<std::size_t>(v)] = true;
        descend();
        placed_[static_cast<std::size_t>(v)] = false;
        order_.pop_back();
      }
      current_.resize(mark);
    }
  }

  int compare_prefix() const {
    for (std::size_t i = 0; i < current_.size(); ++i) {
      if (current_[i] != best_[i]) return current_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  const Skeleton& s_;
  std::vector<int> base_;
  std::vector<int> order_;
  std::vector<bool> placed_;
  std::vector<int> current_;
  std::vector<int> best_;
  bool have_best_ = false;
  std::vector<std::vector<int>> best_orders_;
};

int parity(const std::array<int, 3>& s) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(j)]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Orientation sign of the isomorphism d -> reference diagram determined by
// placing trivalent vertex order[p] at position p. At each vertex the
// reference cyclic order lists the leg first, then edges by the position of
// the far end; parallel edges are matched in the order of their flags at the
// endpoint with the smaller position.
int orientation_sign(const JacobiDiagram& d, const Skeleton& s, const std::vector<int>& order) {
  const int t = s.size();
  std::vector<int> pos(static_cast<std::size_t>(t));
  for (int p = 0; p < t; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
  std::vector<int> occ(d.flag_count(), 0);
  for (int i = 0; i < t; ++i) {
    std::map<int, int> seen;
    for (int f : d.flags(s.vertex_id[static_cast<std::size_t>(i)])) {
      const int w = s.index_of[static_cast<std::size_t>(d.vertex_of(d.partner(f)))];
      if (w < 0 || pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(w)]) continue;
      const int k = seen[w]++;
      occ[static_cast<std::size_t>(f)] = k;
      occ[static_cast<std::size_t>(d.partner(f))] = k;
    }
  }
  int sign = 1;
  for (int i = 0; i < t; ++i) {
    const auto fs = d.flags(s.vertex_id[static_cast<std::size_t>(i)]);
    std::array<std::tuple<int, int, int>, 3> key;
    for (std::size_t k = 0; k < 3; ++k) {
      const int w = s.index_of[static_cast<std::size_t>(d.vertex_of(d.partner(fs[k])))];
      key[k] = w < 0 ? std::make_tuple(0, 0, 0)
                     : std::make_tuple(1, pos[static_cast<std::size_t>(w)], occ[static_cast<std::size_t>(fs[k])]);
    }
    std::array<int, 3> slot{};
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t m = 0; m < 3; ++m)
        if (key[m] < key[k]) ++slot[k];
    sign *= parity(slot);
  }
  return sign;
}

std::string encode(const Skeleton& s, const std::vector<int>& order) {
  std::ostringstream out;
  out << s.size() << ',' << s.univalent << ',' << s.ell << ';';
  for (int v : order) out << s.legs[static_cast<std::size_t>(v)];
  out << ';';
  for (std::size_t p = 1; p < order.size(); ++p) {
    if (p > 1) out << '/';
    for (std::size_t q = 0; q < p; ++q) out << s.adj[static_cast<std::size_t>(order[p])][static_cast<std::size_t>(order[q])];
  }
  return out.str();
}

struct ParsedCode {
  unsigned t = 0, u = 0, ell = 0;
  std::vector<int> legs;
  std::vector<std::vector<int>> adj;
};

ParsedCode parse_code(const std::string& code) {
  ParsedCode pc;
  const auto fail = [&] { throw DiagramError("malformed diagram code '" + code + "'"); };
  const auto s1 = code.find(';');
  const auto s2 = s1 == std::string::npos ? s1 : code.find(';', s1 + 1);
  if (s2 == std::string::npos) fail();
  {
    std::istringstream head(code.substr(0, s1));
    char c1 = 0, c2 = 0;
    if (!(head >> pc.t >> c1 >> pc.u >> c2 >> pc.ell) || c1 != ',' || c2 != ',') fail();
  }
  const std::string legs = code.substr(s1 + 1, s2 - s1 - 1);
  if (legs.size() != pc.t) fail();
  for (char c : legs) pc.legs.push_back(c - '0');
  pc.adj.assign(pc.t, std::vector<int>(pc.t, 0));
  const std::string rows = code.substr(s2 + 1);
  std::size_t at = 0;
  for (unsigned p = 1; p < pc.t; ++p) {
    if (p > 1) {
      if (at >= rows.size() || rows[at] != '/') fail();
      ++at;
    }
    for (unsigned q = 0; q < p; ++q, ++at) {
      if (at >= rows.size() || rows[at] < '0' || rows[at] > '9') fail();
      pc.adj[p][q] = pc.adj[q][p] = rows[at] - '0';
    }
  }
  if (at != rows.size()) fail();
  unsigned leg_total = 0;
  for (unsigned i = 0; i < pc.t; ++i) {
    int deg = pc.legs[i];
    leg_total += static_cast<unsigned>(pc.legs[i]);
    for (unsigned j = 0; j < pc.t; ++j) deg += pc.adj[i][j];
    if (deg != 3) fail();
  }
  if (leg_total + 2 * pc.ell != pc.u) fail();
  return pc;
}

}  // namespace

CanonicalDiagram::CanonicalDiagram(std::string code) : code_(std::move(code)) {
  const ParsedCode pc = parse_code(code_);
  trivalent_ = pc.t;
  univalent_ = pc.u;
  ell_ = pc.ell;
}

JacobiDiagram diagram_from_adjacency(const std::vector<int>& legs, const std::vector<std::vector<int>>& adj,
                                     unsigned ell) {
  const std::size_t t = legs.size();
  JacobiDiagram d;
  std::vector<std::array<int, 3>> flags;
  for (std::size_t i = 0; i < t; ++i) flags.push_back(d.add_trivalent());
  // slot_of[i][(j, k)] = flag at i for the k-th edge to j.
  std::vector<std::map<std::pair<std::size_t, int>, int>> slot_of(t);
  std::vector<int> leg_flag(t, -1);
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t next = 0;
    const auto take = [&] {
      if (next == 3) throw DiagramError("diagram_from_adjacency: vertex degree exceeds 3");
      return flags[i][next++];
    };
    if (legs[i]) leg_flag[i] = take();
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i && adj[i][j] != 0) throw DiagramError("diagram_from_adjacency: self-loop");
      for (int k = 0; k < adj[i][j]; ++k) slot_of[i][{j, k}] = take();
    }
    if (next != 3) throw DiagramError("diagram_from_adjacency: vertex degree below 3");
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      for (int k = 0; k < adj[i][j]; ++k) d.connect(slot_of[i][{j, k}], slot_of[j][{i, k}]);
  for (std::size_t i = 0; i < t; ++i)
    if (legs[i]) d.connect(leg_flag[i], d.add_univalent());
  for (unsigned l = 0; l < ell; ++l) d.connect(d.add_univalent(), d.add_univalent());
  return d;
}

JacobiDiagram CanonicalDiagram::to_diagram() const {
  const ParsedCode pc = parse_code(code_);
  return diagram_from_adjacency(pc.legs, pc.adj, pc.ell);
}

CanonicalForm canonicalize(const JacobiDiagram& d) {
  d.validate();
  const Skeleton s = skeleton_of(d);
  for (int i = 0; i < s.size(); ++i)
    if (s.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] > 0 || s.legs[static_cast<std::size_t>(i)] > 1)
      return {};
  LabelSearch search(s);
  search.run();
  const auto& orders = search.best_orders();
  const int sign = orientation_sign(d, s, orders.front());
  for (std::size_t k = 1; k < orders.size(); ++k)
    if (orientation_sign(d, s, orders[k]) != sign) return {};
  return {CanonicalDiagram(encode(s, orders.front())), sign};
}

}  // namespace hrr::graphhom
