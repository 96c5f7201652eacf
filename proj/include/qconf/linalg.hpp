#pragma once

#include "qconf/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qconf {

using Vec = std::vector<Scalar>;

class RankError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense square-or-rectangular matrix with exact entries; used for matrix
/// realizations of the algebras.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Unit matrix E_{row,col} of size n.
  static Matrix unit(std::size_t n, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const Vec& flat() const { return a_; }

  bool is_zero() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

/// Rank of a list of equal-length vectors.
std::size_t rank(std::vector<Vec> vectors);

/// Basis of {x : A x = 0} for A given by its rows.
std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t ncols);

/// Some solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(std::vector<Vec> rows, const Vec& b);

/// Expands vectors in a fixed list of linearly independent columns.
/// Construction throws RankError when the columns are dependent.
class Expander {
public:
  explicit Expander(const std::vector<Vec>& columns);

  std::size_t size() const { return columns_.size(); }
  /// Coordinates of `target` in the columns, or nullopt when it lies outside
  /// their span.
  std::optional<Vec> coordinates(const Vec& target) const;

private:
  std::vector<Vec> columns_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<Vec> inverse_;  // inverse of the pivot-row submatrix, row-major
};

/// Incrementally grown subspace in reduced echelon form.
class SpanBuilder {
public:
  explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}

  /// Adds v; returns true when the dimension grew.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }

private:
  Vec reduce(Vec v) const;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qconf
