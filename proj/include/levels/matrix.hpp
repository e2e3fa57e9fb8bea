#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "levels/rational.hpp"

namespace levels {

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  /// Builds a matrix whose j-th column is columns[j]; all columns need equal length.
  static Mat from_columns(std::size_t rows, const std::vector<std::vector<Rat>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rat> data() const { return data_; }
  std::vector<Rat> column(std::size_t j) const;
  std::vector<Rat> row(std::size_t i) const;

  Mat transpose() const;
  /// Keeps the listed columns, in the given order.
  Mat select_columns(std::span<const int> columns) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Rat dot(std::span<const Rat> a, std::span<const Rat> b);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// row-scaled integer matrix. Throws DimensionError if m is not square.
Rat det(const Mat& m);

/// Inverse of a square matrix; throws std::domain_error if singular.
Mat inverse(const Mat& m);

/// Rank over the rationals.
std::size_t rank(const Mat& m);

/// Columns form a basis of the right kernel {x : m x = 0}. Each basis
/// vector is scaled to a primitive integer vector.
Mat kernel_basis(const Mat& m);

}  // namespace levels
