#include "jc/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace jc {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Polynomial(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  PolyMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(nvars, Coefficient(1)));
  return m;
}

PolyMatrix PolyMatrix::from_coefficients(const CoeffMatrix& c, std::size_t nvars) {
  PolyMatrix m(c.rows(), c.cols(), nvars);
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) m.set(i, j, Polynomial::constant(nvars, c(i, j)));
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (p.nvars() != nvars_) throw std::invalid_argument("matrix entry lives in a different ring");
  data_.at(r * cols_ + c) = std::move(p);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not conform");
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("matrices live in different rings");
  PolyMatrix m(a.rows_, b.cols_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial sum(a.nvars_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        sum += a(i, k) * b(k, j);
      }
      m.data_[i * m.cols_ + j] = std::move(sum);
    }
  }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes do not conform");
  PolyMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

PolyMatrix operator*(const Coefficient& s, const PolyMatrix& m) {
  PolyMatrix r = m;
  for (auto& p : r.data_) p = s * p;
  return r;
}

PolyMatrix PolyMatrix::substitute(std::span<const Polynomial> images) const {
  const std::size_t target = images.empty() ? nvars_ : images[0].nvars();
  PolyMatrix m(rows_, cols_, target);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].substitute(images);
  return m;
}

CoeffMatrix PolyMatrix::evaluate(std::span<const Coefficient> point) const {
  CoeffMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  }
  return m;
}

namespace {

void require_square(const PolyMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("square matrix required, got " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
}

// Laplace expansion along the first row of the submatrix given by row offset
// and a column selection.
Polynomial cofactor_expand(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  const std::size_t n = cols.size();
  if (n == 1) return m(row, cols[0]);
  Polynomial det(m.nvars());
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& a = m(row, cols[k]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> minor;
    minor.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) minor.push_back(cols[j]);
    }
    Polynomial term = a * cofactor_expand(m, row + 1, minor);
    if (k % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

Polynomial determinant_cofactor(const PolyMatrix& m) {
  require_square(m);
  if (m.rows() == 0) return Polynomial::constant(m.nvars(), Coefficient(1));
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_expand(m, 0, cols);
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.nvars(), Coefficient(1));
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(m.nvars())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  bool negate = false;
  Polynomial prev = Polynomial::constant(m.nvars(), Coefficient(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(m.nvars());
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.divide_exact(prev);
      }
      a[i][k] = Polynomial(m.nvars());
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return negate ? -det : det;
}

Polynomial determinant(const PolyMatrix& m) {
  require_square(m);
  return m.rows() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

bool matrix_power_is_zero(const PolyMatrix& m, unsigned k) {
  require_square(m);
  if (k == 0) return m.rows() == 0;
  PolyMatrix p = m;
  for (unsigned i = 1; i < k; ++i) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

std::optional<unsigned> nilpotency_index(const PolyMatrix& m, unsigned max_power) {
  require_square(m);
  PolyMatrix p = m;
  for (unsigned k = 1; k <= max_power; ++k) {
    if (p.is_zero()) return k;
    if (k < max_power) p = p * m;
  }
  return std::nullopt;
}

}  // namespace jc
