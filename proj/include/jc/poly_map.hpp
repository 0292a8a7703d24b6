#pragma once

#include "jc/poly_matrix.hpp"
#include "jc/polynomial.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace jc {

/// Polynomial self-map of K^n: n components, each in n variables.
class PolyMap {
 public:
  PolyMap() = default;
  explicit PolyMap(std::vector<Polynomial> components);
  static PolyMap identity(std::size_t n);

  std::size_t arity() const { return components_.size(); }
  std::span<const Polynomial> components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  long degree() const;
  Domain domain() const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

  std::vector<Coefficient> evaluate(std::span<const Coefficient> point) const;
  std::string to_string(const VariableNamer& name = positional_name) const;

 private:
  std::vector<Polynomial> components_;
};

/// (f o g)_i = f_i(g_1, ..., g_n).
PolyMap compose(const PolyMap& f, const PolyMap& g);
/// Entry (j, k) = d f_j / d x_k.
PolyMatrix jacobian(const PolyMap& f);
/// Jacobian of an arbitrary list of polynomials sharing one ring.
PolyMatrix jacobian(std::span<const Polynomial> components);

}  // namespace jc
