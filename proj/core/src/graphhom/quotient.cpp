#include "hrr/graphhom/quotient.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace hrr::graphhom {

namespace {

void check_bidegree(Bidegree b, unsigned cap) {
  if (b.total() % 2 != 0)
    throw std::invalid_argument("bidegree (" + std::to_string(b.legs) + "," + std::to_string(b.trivalent) +
                                ") has odd total degree");
  if (b.total() > cap)
    throw DegreeCapError("bidegree (" + std::to_string(b.legs) + "," + std::to_string(b.trivalent) +
                         ") exceeds the degree cap " + std::to_string(cap));
}

// Fills the strictly upper triangle of adj so that every vertex reaches its
// residual degree, visiting pairs row by row.
class MultigraphFiller {
public:
  MultigraphFiller(std::vector<int> legs, unsigned ell, std::set<CanonicalDiagram>& out)
      : legs_(std::move(legs)), ell_(ell), out_(out), t_(legs_.size()), adj_(t_, std::vector<int>(t_, 0)) {
    for (int l : legs_) residual_.push_back(3 - l);
  }

  void run() { fill(0, 1); }

private:
  void fill(std::size_t i, std::size_t j) {
    if (i + 1 >= t_) {
      if (t_ == 0 || residual_[t_ - 1] == 0) emit();
      return;
    }
    if (j == t_) {
      if (residual_[i] == 0) fill(i + 1, i + 2);
      return;
    }
    int capacity = 0;
    for (std::size_t k = j; k < t_; ++k) capacity += residual_[k];
    if (capacity < residual_[i]) return;
    const int hi = std::min(residual_[i], residual_[j]);
    for (int m = 0; m <= hi; ++m) {
      adj_[i][j] = adj_[j][i] = m;
      residual_[i] -= m;
      residual_[j] -= m;
      fill(i, j + 1);
      residual_[i] += m;
      residual_[j] += m;
    }
    adj_[i][j] = adj_[j][i] = 0;
  }

  void emit() {
    const CanonicalForm c = canonicalize(diagram_from_adjacency(legs_, adj_, ell_));
    if (c.sign != 0) out_.insert(c.diagram);
  }

  std::vector<int> legs_;
  unsigned ell_;
  std::set<CanonicalDiagram>& out_;
  std::size_t t_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> residual_;
};

// The diagram obtained from d by replacing the edge fv-fw (v at fv, w at fw)
// with one of the two other ways of joining the four outer flags. With the
// cyclic orders rotated to v = (a, e, b) and w = (e, c, d), the new vertices
// are (e, a, c), (b, e, d) when cross is false and (e, a, d), (b, e, c)
// otherwise.
JacobiDiagram resplice(const JacobiDiagram& d, int fv, int fw, bool cross) {
  const int v = d.vertex_of(fv);
  const int w = d.vertex_of(fw);
  const auto vf = d.flags(v);
  const auto wf = d.flags(w);
  const std::size_t kv = static_cast<std::size_t>(std::find(vf.begin(), vf.end(), fv) - vf.begin());
  const std::size_t kw = static_cast<std::size_t>(std::find(wf.begin(), wf.end(), fw) - wf.begin());
  const int a = vf[(kv + 2) % 3], b = vf[(kv + 1) % 3];
  const int c = wf[(kw + 1) % 3], dd = wf[(kw + 2) % 3];

  JacobiDiagram out;
  std::vector<int> map(d.flag_count(), -1);
  for (std::size_t x = 0; x < d.vertex_count(); ++x) {
    const int xi = static_cast<int>(x);
    if (xi == v || xi == w) continue;
    const auto fs = d.flags(xi);
    if (fs.size() == 1) {
      map[static_cast<std::size_t>(fs[0])] = out.add_univalent();
    } else {
      const auto nf = out.add_trivalent();
      for (std::size_t k = 0; k < 3; ++k) map[static_cast<std::size_t>(fs[k])] = nf[k];
    }
  }
  const auto nv = out.add_trivalent();
  const auto nw = out.add_trivalent();
  map[static_cast<std::size_t>(a)] = nv[1];
  map[static_cast<std::size_t>(cross ? dd : c)] = nv[2];
  map[static_cast<std::size_t>(b)] = nw[0];
  map[static_cast<std::size_t>(cross ? c : dd)] = nw[2];
  for (std::size_t f = 0; f < d.flag_count(); ++f) {
    const int fi = static_cast<int>(f);
    if (fi == fv || fi == fw) continue;
    const int p = d.partner(fi);
    if (map[f] < map[static_cast<std::size_t>(p)]) out.connect(map[f], map[static_cast<std::size_t>(p)]);
  }
  out.connect(nv[0], nw[1]);
  return out;
}

}  // namespace

std::vector<CanonicalDiagram> enumerate_diagrams(Bidegree b) {
  if (b.total() % 2 != 0) return {};
  std::set<CanonicalDiagram> found;
  const unsigned t = b.trivalent;
  for (unsigned ell = 0; 2 * ell <= b.legs; ++ell) {
    const unsigned m = b.legs - 2 * ell;
    if (m > t) continue;
    std::vector<int> legs(t, 0);
    for (unsigned i = 0; i < m; ++i) legs[i] = 1;
    MultigraphFiller(legs, ell, found).run();
  }
  return {found.begin(), found.end()};
}

std::vector<GraphVector> ihx_relations(const CanonicalDiagram& cd) {
  const JacobiDiagram d = cd.to_diagram();
  std::vector<GraphVector> out;
  for (std::size_t f = 0; f < d.flag_count(); ++f) {
    const int fv = static_cast<int>(f);
    const int fw = d.partner(fv);
    if (fw < fv) continue;
    const int v = d.vertex_of(fv), w = d.vertex_of(fw);
    if (v == w || d.is_univalent(v) || d.is_univalent(w)) continue;
    GraphVector rel(d);
    rel.add(resplice(d, fv, fw, false), Rational(-1));
    rel.add(resplice(d, fv, fw, true), Rational(1));
    out.push_back(std::move(rel));
  }
  return out;
}

QuotientBasis QuotientBasis::build(Bidegree b, unsigned cap) {
  check_bidegree(b, cap);
  QuotientBasis q;
  q.bidegree_ = b;
  q.diagrams_ = enumerate_diagrams(b);
  for (std::size_t i = 0; i < q.diagrams_.size(); ++i) q.column_.emplace(q.diagrams_[i], i);

  auto& rows = q.pivot_rows_;
  for (const auto& d : q.diagrams_) {
    for (const GraphVector& rel : ihx_relations(d)) {
      SparseRow r;
      for (const auto& [cd, c] : rel.terms()) r.emplace(q.column_of(cd), c);
      while (!r.empty()) {
        const auto lead = r.begin();
        const auto hit = rows.find(lead->first);
        if (hit == rows.end()) {
          const Rational inv = lead->second.inverse();
          for (auto& [col, x] : r) x *= inv;
          rows.emplace(lead->first, std::move(r));
          break;
        }
        const Rational c = lead->second;
        for (const auto& [col, x] : hit->second) {
          Rational& y = r[col];
          y -= c * x;
          if (y.is_zero()) r.erase(col);
        }
      }
    }
  }
  // Back substitution: afterwards no row mentions another pivot column.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    SparseRow& r = it->second;
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [col, x] : r)
      if (col != it->first && rows.count(col)) hits.emplace_back(col, x);
    for (const auto& [col, c] : hits)
      for (const auto& [k, x] : rows.at(col)) {
        Rational& y = r[k];
        y -= c * x;
        if (y.is_zero()) r.erase(k);
      }
  }
  return q;
}

std::size_t QuotientBasis::column_of(const CanonicalDiagram& d) const {
  const auto it = column_.find(d);
  if (it == column_.end())
    throw std::invalid_argument("diagram [" + d.code() + "] is not in the quotient at bidegree (" +
                                std::to_string(bidegree_.legs) + "," + std::to_string(bidegree_.trivalent) + ")");
  return it->second;
}

std::vector<CanonicalDiagram> QuotientBasis::basis() const {
  std::vector<CanonicalDiagram> out;
  for (std::size_t i = 0; i < diagrams_.size(); ++i)
    if (!pivot_rows_.count(i)) out.push_back(diagrams_[i]);
  return out;
}

GraphVector QuotientBasis::reduce(const GraphVector& g) const {
  GraphVector out;
  for (const auto& [d, c] : g.terms()) {
    const std::size_t col = column_of(d);
    const auto row = pivot_rows_.find(col);
    if (row == pivot_rows_.end()) {
      out.add(d, c);
      continue;
    }
    for (const auto& [k, x] : row->second)
      if (k != col) out.add(diagrams_[k], -c * x);
  }
  return out;
}

std::vector<Rational> QuotientBasis::coordinates(const GraphVector& g) const {
  const GraphVector r = reduce(g);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < diagrams_.size(); ++i)
    if (!pivot_rows_.count(i)) out.push_back(r.coefficient(diagrams_[i]));
  return out;
}

void QuotientBasis::save(std::ostream& out) const {
  out << "hrr-graph-basis v1\n";
  out << "bidegree " << bidegree_.legs << ' ' << bidegree_.trivalent << '\n';
  out << "diagrams " << diagrams_.size() << '\n';
  for (const auto& d : diagrams_) out << d.code() << '\n';
  out << "reduction " << pivot_rows_.size() << '\n';
  for (const auto& [p, row] : pivot_rows_) {
    out << p << ' ' << row.size();
    for (const auto& [k, x] : row) out << ' ' << k << ' ' << x.numerator() << ' ' << x.denominator();
    out << '\n';
  }
}

QuotientBasis QuotientBasis::load(std::istream& in) {
  const auto fail = [](const std::string& why) -> void { throw std::runtime_error("basis file: " + why); };
  std::string line, word;
  if (!std::getline(in, line) || line != "hrr-graph-basis v1") fail("unknown header");
  QuotientBasis q;
  std::size_t n = 0, r = 0;
  if (!(in >> word >> q.bidegree_.legs >> q.bidegree_.trivalent) || word != "bidegree") fail("missing bidegree");
  if (!(in >> word >> n) || word != "diagrams") fail("missing diagram count");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(in >> word)) fail("truncated diagram list");
    try {
      q.diagrams_.emplace_back(word);
    } catch (const DiagramError& e) {
      fail(e.what());
    }
    if (bidegree_of(q.diagrams_.back()) != q.bidegree_) fail("diagram of wrong bidegree");
    if (i > 0 && !(q.diagrams_[i - 1] < q.diagrams_[i])) fail("diagrams not sorted");
    q.column_.emplace(q.diagrams_.back(), i);
  }
  if (!(in >> word >> r) || word != "reduction") fail("missing reduction");
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = 0, nnz = 0;
    if (!(in >> p >> nnz) || p >= n) fail("bad reduction row");
    SparseRow row;
    for (std::size_t k = 0; k < nnz; ++k) {
      std::size_t col = 0;
      std::string num, den;
      if (!(in >> col >> num >> den) || col >= n) fail("bad reduction entry");
      try {
        row.emplace(col, Rational::parse(num + "/" + den));
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    q.pivot_rows_.emplace(p, std::move(row));
  }
  return q;
}

BasisRegistry::BasisRegistry(std::optional<std::filesystem::path> cache_dir, unsigned cap)
    : cache_dir_(std::move(cache_dir)), cap_(cap) {}

std::filesystem::path BasisRegistry::cache_file(const std::filesystem::path& dir, Bidegree b) {
  return dir / ("basis-u" + std::to_string(b.legs) + "-t" + std::to_string(b.trivalent) + ".txt");
}

std::shared_ptr<const QuotientBasis> BasisRegistry::obtain(Bidegree b) const {
  check_bidegree(b, cap_);
  if (cache_dir_) {
    const auto file = cache_file(*cache_dir_, b);
    if (std::ifstream in(file); in) {
      auto q = std::make_shared<const QuotientBasis>(QuotientBasis::load(in));
      if (q->bidegree() != b) throw std::runtime_error("basis file " + file.string() + " has the wrong bidegree");
      return q;
    }
  }
  auto q = std::make_shared<const QuotientBasis>(QuotientBasis::build(b, cap_));
  if (cache_dir_) {
    std::filesystem::create_directories(*cache_dir_);
    const auto file = cache_file(*cache_dir_, b);
    auto tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      q->save(out);
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
  }
  return q;
}

const QuotientBasis& BasisRegistry::get(Bidegree b) {
  std::shared_future<std::shared_ptr<const QuotientBasis>> f;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(b);
    if (it == entries_.end())
      it = entries_.emplace(b, std::async(std::launch::async, [this, b] { return obtain(b); }).share()).first;
    f = it->second;
  }
  return *f.get();
}

void BasisRegistry::prefetch(std::span<const Bidegree> bs) {
  for (Bidegree b : bs) {
    std::lock_guard lock(mutex_);
    if (!entries_.count(b)) entries_.emplace(b, std::async(std::launch::async, [this, b] { return obtain(b); }).share());
  }
  for (Bidegree b : bs) get(b);
}

GraphVector BasisRegistry::reduce(const GraphVector& g) {
  GraphVector out;
  for (Bidegree b : g.bidegrees()) out += get(b).reduce(g.homogeneous_part(b));
  return out;
}

}  // namespace hrr::graphhom
