#ifndef HRR_GRAPHHOM_QUOTIENT_HPP
#define HRR_GRAPHHOM_QUOTIENT_HPP

#include <filesystem>
#include <future>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hrr/graphhom/graph_vector.hpp"

namespace hrr::graphhom {

struct DegreeCapError : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr unsigned default_degree_cap = 10;

// All AS-nonzero isomorphism classes at the given bidegree (connected or
// not, ell components included), sorted by code.
std::vector<CanonicalDiagram> enumerate_diagrams(Bidegree b);

// One I - H + X relation for every edge between two trivalent vertices of the
// reference diagram of d.
std::vector<GraphVector> ihx_relations(const CanonicalDiagram& d);

// The AS/IHX quotient at one bidegree. Spanning diagrams are the enumerated
// classes; the relations are row-reduced exactly and the non-pivot diagrams
// form the basis.
class QuotientBasis {
public:
  // Throws DegreeCapError if b.total() > cap and std::invalid_argument if
  // the total degree is odd.
  static QuotientBasis build(Bidegree b, unsigned cap = default_degree_cap);

  Bidegree bidegree() const { return bidegree_; }
  const std::vector<CanonicalDiagram>& diagrams() const { return diagrams_; }
  std::vector<CanonicalDiagram> basis() const;
  std::size_t dimension() const { return diagrams_.size() - pivot_rows_.size(); }
  std::size_t relation_rank() const { return pivot_rows_.size(); }

  // Normal form: a combination of basis diagrams. Throws std::invalid_argument
  // on terms of another bidegree.
  GraphVector reduce(const GraphVector& g) const;
  std::vector<Rational> coordinates(const GraphVector& g) const;
  bool is_zero(const GraphVector& g) const { return reduce(g).is_zero(); }

  void save(std::ostream& out) const;
  // Throws std::runtime_error on a malformed or mismatched file.
  static QuotientBasis load(std::istream& in);

private:
  using SparseRow = std::map<std::size_t, Rational>;

  std::size_t column_of(const CanonicalDiagram& d) const;

  Bidegree bidegree_;
  std::vector<CanonicalDiagram> diagrams_;
  std::map<CanonicalDiagram, std::size_t> column_;
  // pivot column -> row with coefficient 1 there and otherwise only basis
  // columns.
  std::map<std::size_t, SparseRow> pivot_rows_;
};

// Thread-safe cache of quotient bases, optionally backed by a directory of
// basis files. Distinct bidegrees are built concurrently.
class BasisRegistry {
public:
  explicit BasisRegistry(std::optional<std::filesystem::path> cache_dir = std::nullopt,
                         unsigned cap = default_degree_cap);

  const QuotientBasis& get(Bidegree b);
  void prefetch(std::span<const Bidegree> bs);

  // Reduces every bidegree component in its own quotient.
  GraphVector reduce(const GraphVector& g);
  bool is_zero(const GraphVector& g) { return reduce(g).is_zero(); }

  static std::filesystem::path cache_file(const std::filesystem::path& dir, Bidegree b);

private:
  std::shared_ptr<const QuotientBasis> obtain(Bidegree b) const;

  std::optional<std::filesystem::path> cache_dir_;
  unsigned cap_;
  std::mutex mutex_;
  std::map<Bidegree, std::shared_future<std::shared_ptr<const QuotientBasis>>> entries_;
};

}  // namespace hrr::graphhom

#endif  // HRR_GRAPHHOM_QUOTIENT_HPP
