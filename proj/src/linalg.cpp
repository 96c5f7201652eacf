#include "qconf/linalg.hpp"

#include <utility>

namespace qconf {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t row, std::size_t col) {
  Matrix m(n, n);
  m(row, col) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// Row-reduces in place; returns pivot column of each nonzero row.
std::vector<std::size_t> echelon(std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r])
      if (!x.is_zero()) x *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c].is_zero()) continue;
      Scalar f = rows[q][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!rows[r][k].is_zero()) rows[q][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::size_t rank(std::vector<Vec> vectors) { return echelon(vectors).size(); }

std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t ncols) {
  const auto pivots = echelon(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols);
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(std::vector<Vec> rows, const Vec& b) {
  if (rows.empty()) return Vec{};
  const std::size_t n = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(b.at(r));
  const auto pivots = echelon(rows);
  Vec x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;  // 0 = nonzero
    x[pivots[r]] = rows[r][n];
  }
  return x;
}

Expander::Expander(const std::vector<Vec>& columns) : columns_(columns) {
  const std::size_t k = columns.size();
  if (k == 0) return;
  // Pivot columns of the transposed system are rows of A that form an invertible block.
  std::vector<Vec> transposed = columns;
  pivot_rows_ = echelon(transposed);
  if (pivot_rows_.size() < k) throw RankError("linearly dependent basis images");

  // Invert the k x k block S[i][j] = columns[j][pivot_rows[i]] by Gauss-Jordan.
  std::vector<Vec> aug(k, Vec(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][pivot_rows_[i]];
    aug[i][k + i] = Scalar(1);
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && aug[p][c].is_zero()) ++p;
    if (p == k) throw RankError("singular pivot block");
    std::swap(aug[c], aug[p]);
    Scalar inv = aug[c][c].inverse();
    for (auto& x : aug[c])
      if (!x.is_zero()) x *= inv;
    for (std::size_t q = 0; q < k; ++q) {
      if (q == c || aug[q][c].is_zero()) continue;
      Scalar f = aug[q][c];
      for (std::size_t j = 0; j < 2 * k; ++j)
        if (!aug[c][j].is_zero()) aug[q][j] -= f * aug[c][j];
    }
  }
  inverse_.assign(k, Vec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inverse_[i][j] = aug[i][k + j];
}

std::optional<Vec> Expander::coordinates(const Vec& target) const {
  const std::size_t k = columns_.size();
  Vec coords(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Scalar& b = target[pivot_rows_[j]];
      if (!b.is_zero() && !inverse_[i][j].is_zero()) coords[i] += inverse_[i][j] * b;
    }
  // Reconstruct and compare on every row: rejects targets outside the span.
  for (std::size_t r = 0; r < target.size(); ++r) {
    Scalar acc;
    for (std::size_t j = 0; j < k; ++j)
      if (!coords[j].is_zero() && !columns_[j][r].is_zero()) acc += coords[j] * columns_[j][r];
    if (!(acc == target[r])) return std::nullopt;
  }
  return coords;
}

Vec SpanBuilder::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivots_[r];
    if (v[c].is_zero()) continue;
    Scalar f = v[c];
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
  }
  return v;
}

bool SpanBuilder::contains(const Vec& v) const {
  Vec w = reduce(v);
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool SpanBuilder::add(const Vec& v) {
  Vec w = reduce(v);
  std::size_t c = 0;
  while (c < ambient_ && w[c].is_zero()) ++c;
  if (c == ambient_) return false;
  Scalar inv = w[c].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  // Keep the stored rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[c].is_zero()) continue;
    Scalar f = row[c];
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!w[k].is_zero()) row[k] -= f * w[k];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(c);
  return true;
}

}  // namespace qconf
