#include "hrr/arith/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace hrr {

QMatrix::QMatrix(std::vector<std::vector<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  a_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("QMatrix: ragged rows");
    for (auto& x : r) a_.push_back(std::move(x));
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> QMatrix::row(std::size_t r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void QMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("QMatrix::append_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rational> QMatrix::operator*(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
  return y;
}

namespace {

bool smaller_pivot(const Rational& a, const Rational& b) {
  const int n = mpz_cmpabs(a.get().get_num_mpz_t(), b.get().get_num_mpz_t());
  if (n != 0) return n < 0;
  return a.denominator() < b.denominator();
}

void swap_rows(QMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace

RowEchelon rref(QMatrix a) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      if (best == a.rows() || smaller_pivot(a(i, c), a(best, c))) best = i;
    }
    if (best == a.rows()) continue;
    swap_rows(a, r, best);
    const Rational inv = a(r, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const QMatrix& a) { return rref(a).rank(); }

Rational determinant(QMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      swap_rows(a, p, c);
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(i, k) -= f * a(c, k);
    }
  }
  return det;
}

SolveResult rref_solve(const QMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rref_solve: right-hand side has wrong length");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(std::move(aug));
  SolveResult out;
  const std::size_t n = a.cols();
  if (!e.pivots.empty() && e.pivots.back() == n) {
    out.kind = SolveKind::Inconsistent;
    out.rank = e.rank() - 1;
    return out;
  }
  out.rank = e.rank();
  out.solution.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    out.solution[e.pivots[r]] = e.reduced(r, n);
    is_pivot[e.pivots[r]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    out.nullspace.push_back(std::move(v));
  }
  out.kind = out.nullspace.empty() ? SolveKind::Unique : SolveKind::Family;
  return out;
}

std::string to_string(SolveKind kind) {
  switch (kind) {
    case SolveKind::Unique: return "unique";
    case SolveKind::Family: return "family";
    case SolveKind::Inconsistent: return "inconsistent";
  }
  return "?";
}

}  // namespace hrr
