#include "jc/coeff_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace jc {

CoeffMatrix CoeffMatrix::from_rows(const std::vector<std::vector<Coefficient>>& rows) {
  if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix");
  CoeffMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

CoeffMatrix CoeffMatrix::identity(std::size_t n) {
  CoeffMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Coefficient(1);
  return m;
}

bool CoeffMatrix::is_zero() const {
  for (const auto& c : data_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CoeffMatrix::is_real() const {
  for (const auto& c : data_) {
    if (!c.is_real()) return false;
  }
  return true;
}

CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not conform");
  CoeffMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

CoeffMatrix operator*(const Coefficient& s, CoeffMatrix m) {
  for (auto& c : m.data_) c *= s;
  return m;
}

CoeffMatrix operator+(CoeffMatrix a, const CoeffMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes do not conform");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
  return a;
}

std::vector<Coefficient> CoeffMatrix::apply(std::span<const Coefficient> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Coefficient> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

Coefficient CoeffMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  CoeffMatrix m = *this;
  const std::size_t n = rows_;
  Coefficient det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Coefficient(0);
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      Coefficient f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

std::optional<CoeffMatrix> CoeffMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  CoeffMatrix m = *this;
  CoeffMatrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(k, c), m(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    }
    const Coefficient p = m(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      m(k, c) /= p;
      inv(k, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || m(r, k).is_zero()) continue;
      const Coefficient f = m(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

}  // namespace jc
