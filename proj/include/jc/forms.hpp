#pragma once

#include "jc/coeff_matrix.hpp"
#include "jc/poly_map.hpp"
#include "jc/poly_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace jc::forms {

/// Square matrix A defining the cubic-linear map X + (AX)^{*3}, whose k-th
/// cubic term is (row_k(A) . X)^3.
class CubicLinearSpec {
 public:
  explicit CubicLinearSpec(CoeffMatrix a);
  std::size_t dimension() const { return a_.rows(); }
  const CoeffMatrix& matrix() const { return a_; }

 private:
  CoeffMatrix a_;
};

struct FormReport {
  bool is_keller = false;
  Polynomial keller_det;
  bool is_yagzhev = false;
  /// Present when the map is of cubic-linear form.
  std::optional<bool> is_dmap;
  std::optional<unsigned> nilpotency_index;
  /// Outcome of det(I + 3M) == 1, run next to the nilpotency test.
  std::optional<bool> unit_det;
};

struct KellerCheck {
  bool is_keller = false;
  Polynomial det;
};

PolyMap cubic_linear_map(const CubicLinearSpec& spec);

/// Linear forms AX as polynomials in n variables.
std::vector<Polynomial> linear_forms(const CubicLinearSpec& spec);
/// M(X) = (AX)^{Delta 2} A: entry (j, k) = (A_j . X)^2 A_jk.
PolyMatrix squared_diag_times_a(const CubicLinearSpec& spec);
/// A (AX)^{Delta 2}: entry (j, k) = A_jk (A_k . X)^2.
PolyMatrix a_times_squared_diag(const CubicLinearSpec& spec);

KellerCheck check_keller(const PolyMap& f);
/// f - X is zero or homogeneous cubic in every component.
bool check_yagzhev(const PolyMap& f);
/// Nilpotency of (AX)^{Delta 2} A with the unit-determinant cross-check.
FormReport check_dmap(const CubicLinearSpec& spec);
/// det(I + lambda A (AX)^{Delta 2}) == 1 identically.
bool check_prop1(const CubicLinearSpec& spec, const Coefficient& lambda);

/// Recovers A when every component of f - X is zero or the cube of a linear
/// form with a recoverable cube-root coefficient. Gaussian coefficients are
/// recovered when the relevant cube is real or purely imaginary.
std::optional<CubicLinearSpec> recognize_cubic_linear(const PolyMap& f);

/// Keller + Yagzhev checks, plus the D-map fields when f is cubic-linear.
FormReport classify(const PolyMap& f);

/// P(X) - P(Y) - J_P((X+Y)/2)(X-Y) in the 2n variables (x1..xn, y1..yn).
/// Throws std::invalid_argument for components of degree above 2.
std::vector<Polynomial> wang_identity_residual(const PolyMap& p);

/// Real form of a map over Q(i): variables interleaved (y1, z1, ..., yn, zn)
/// with x_k = y_k + i z_k; components (Re P1, Im P1, ..., Re Pn, Im Pn).
PolyMap realify(const PolyMap& f);
/// Variable names y1, z1, y2, z2, ... for realified maps.
std::string realified_name(std::size_t index);

struct RealifyDetSample {
  std::vector<Coefficient> point;  // (y1, z1, ...)
  Coefficient real_det;             // det J_{P*}(Y, Z)
  Coefficient complex_det;          // det J_P(Y + iZ)
  bool agrees = false;              // real_det == |complex_det|^2

  bool operator==(const RealifyDetSample&) const = default;
};

struct RealifyDetResult {
  bool ok = true;
  std::vector<RealifyDetSample> samples;
};

/// Checks det J_{P*}(Y,Z) = |det J_P(Y+iZ)|^2 exactly at pseudo-random
/// rational points drawn deterministically from seed.
RealifyDetResult realify_det_check(const PolyMap& f, unsigned samples, std::uint64_t seed);

}  // namespace jc::forms
