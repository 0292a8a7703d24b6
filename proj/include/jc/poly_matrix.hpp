#pragma once

#include "jc/coeff_matrix.hpp"
#include "jc/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace jc {

/// Rectangular matrix of polynomials over one ambient ring, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
  static PolyMatrix identity(std::size_t n, std::size_t nvars);
  /// Constant matrix embedded in the ring with nvars variables.
  static PolyMatrix from_coefficients(const CoeffMatrix& m, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Entries must stay in the matrix's ring.
  void set(std::size_t r, std::size_t c, Polynomial p);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Coefficient& s, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  /// Entrywise substitution (see Polynomial::substitute).
  PolyMatrix substitute(std::span<const Polynomial> images) const;
  CoeffMatrix evaluate(std::span<const Coefficient> point) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  std::vector<Polynomial> data_;
};

/// Exact determinant: cofactor expansion up to 4x4, Bareiss beyond.
Polynomial determinant(const PolyMatrix& m);
Polynomial determinant_cofactor(const PolyMatrix& m);
/// Fraction-free elimination with exact polynomial division by the
/// previous pivot.
Polynomial determinant_bareiss(const PolyMatrix& m);

/// True iff m^k is identically zero.
bool matrix_power_is_zero(const PolyMatrix& m, unsigned k);
/// Least k <= max_power with m^k identically zero.
std::optional<unsigned> nilpotency_index(const PolyMatrix& m, unsigned max_power);

}  // namespace jc
