#pragma once

#include "jc/groebner.hpp"
#include "jc/poly_map.hpp"

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

namespace jc::inv {

enum class InverseStatus { inverse_found, not_invertible_groebner, not_polynomial_within_bound, singular_linear_part };
enum class InverseMethod { series, groebner };

std::string to_string(InverseStatus status);
std::string to_string(InverseMethod method);

struct InverseCertificate {
  InverseStatus status = InverseStatus::singular_linear_part;
  InverseMethod method = InverseMethod::series;
  std::optional<PolyMap> inverse;
  /// Truncation degree for the series engine; deg(f)^(n-1) for reference
  /// with the Groebner engine.
  long degree_bound_used = 0;
  /// Offending basis element or nonzero residual.
  std::optional<Polynomial> witness;
  /// Names for the witness ring (x1..xn, then y1..yn for graph ideals).
  std::vector<std::string> witness_variables;
  /// Both compositions were checked to be the identity.
  bool verified = false;
};

/// deg(f)^(n-1), saturating; 1 for n = 1.
long inverse_degree_bound(const PolyMap& f);

/// Formal inverse by fixed-point iteration G = X - H(G) on the normalized
/// map X + H, built one homogeneous degree at a time and truncated at
/// max_degree (default deg(f)^(n-1)). Throws std::invalid_argument when
/// max_degree < 1.
InverseCertificate series_inverse(const PolyMap& f, std::optional<long> max_degree = std::nullopt);

/// Reduced Groebner basis of <y_k - f_k(x)> under the block order x > y;
/// invertible iff the basis is {x_k - G_k(y)}.
InverseCertificate groebner_inverse(const PolyMap& f, std::stop_token stop = {});

/// g o f = id and f o g = id, exactly.
bool verify_inverse(const PolyMap& f, const PolyMap& g);

}  // namespace jc::inv
