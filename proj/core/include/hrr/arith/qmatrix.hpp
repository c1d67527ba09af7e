#ifndef HRR_ARITH_QMATRIX_HPP
#define HRR_ARITH_QMATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hrr/arith/rational.hpp"

namespace hrr {

// Dense row-major matrix over Q.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  QMatrix(std::vector<std::vector<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& row);

  std::vector<Rational> operator*(const std::vector<Rational>& x) const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct RowEchelon {
  QMatrix reduced;                  // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Exact Gauss-Jordan elimination. Among the candidate pivots in a column the
// entry with the smallest |numerator| (then denominator) is chosen.
RowEchelon rref(QMatrix a);
std::size_t rank(const QMatrix& a);
Rational determinant(QMatrix a);

enum class SolveKind { Unique, Family, Inconsistent };

struct SolveResult {
  SolveKind kind = SolveKind::Inconsistent;
  std::size_t rank = 0;
  std::vector<Rational> solution;               // particular solution (free vars 0)
  std::vector<std::vector<Rational>> nullspace;  // basis of ker A
};

// Solves A x = b exactly. Throws std::invalid_argument on dimension mismatch.
SolveResult rref_solve(const QMatrix& a, const std::vector<Rational>& b);

std::string to_string(SolveKind kind);

}  // namespace hrr

#endif  // HRR_ARITH_QMATRIX_HPP
