#pragma once

#include "jc/coefficient.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace jc {

/// Dense matrix of exact coefficients, row-major.
class CoeffMatrix {
 public:
  CoeffMatrix() = default;
  CoeffMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rows must be non-empty and of equal length.
  static CoeffMatrix from_rows(const std::vector<std::vector<Coefficient>>& rows);
  static CoeffMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Coefficient& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coefficient& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Coefficient> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  bool is_real() const;

  friend CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b);
  friend CoeffMatrix operator*(const Coefficient& s, CoeffMatrix m);
  friend CoeffMatrix operator+(CoeffMatrix a, const CoeffMatrix& b);
  friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;
  std::vector<Coefficient> apply(std::span<const Coefficient> v) const;

  /// Exact determinant by Gaussian elimination over Q(i).
  Coefficient determinant() const;
  /// Exact inverse, or nullopt when singular.
  std::optional<CoeffMatrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coefficient> data_;
};

}  // namespace jc
