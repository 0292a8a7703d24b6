#include "jc/inversion.hpp"

#include "jc/coeff_matrix.hpp"

#include <limits>
#include <stdexcept>

namespace jc::inv {

std::string to_string(InverseStatus status) {
  switch (status) {
    case InverseStatus::inverse_found:
      return "inverse-found";
    case InverseStatus::not_invertible_groebner:
      return "not-invertible-groebner";
    case InverseStatus::not_polynomial_within_bound:
      return "not-polynomial-within-bound";
    case InverseStatus::singular_linear_part:
      return "singular-linear-part";
  }
  return "unknown";
}

std::string to_string(InverseMethod method) { return method == InverseMethod::series ? "series" : "groebner"; }

long inverse_degree_bound(const PolyMap& f) {
  const long d = std::max(1L, f.degree());
  long bound = 1;
  for (std::size_t i = 1; i < f.arity(); ++i) {
    if (bound > std::numeric_limits<long>::max() / d) return std::numeric_limits<long>::max();
    bound *= d;
  }
  return bound;
}

bool verify_inverse(const PolyMap& f, const PolyMap& g) {
  if (f.arity() != g.arity()) {
    throw std::invalid_argument("cannot compare inverses of arity " + std::to_string(f.arity()) + " and " +
                                std::to_string(g.arity()));
  }
  const PolyMap id = PolyMap::identity(f.arity());
  return compose(g, f) == id && compose(f, g) == id;
}

namespace {

std::vector<std::string> positional_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(positional_name(i));
  return names;
}

// First nonzero component of g o f - id, if any.
std::optional<Polynomial> left_residual(const PolyMap& g, const PolyMap& f) {
  const PolyMap gf = compose(g, f);
  for (std::size_t k = 0; k < f.arity(); ++k) {
    Polynomial r = gf[k] - Polynomial::variable(f.arity(), k);
    if (!r.is_zero()) return r;
  }
  return std::nullopt;
}

}  // namespace

InverseCertificate series_inverse(const PolyMap& f, std::optional<long> max_degree) {
  if (max_degree && *max_degree < 1) {
    throw std::invalid_argument("max degree must be at least 1, got " + std::to_string(*max_degree));
  }
  const std::size_t n = f.arity();
  InverseCertificate cert;
  cert.method = InverseMethod::series;
  cert.degree_bound_used = max_degree.value_or(inverse_degree_bound(f));
  cert.witness_variables = positional_names(n);
  const long bound = cert.degree_bound_used;

  CoeffMatrix linear(n, n);
  std::vector<Polynomial> shifted;
  shifted.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) linear(j, k) = f[j].coefficient(Monomial::variable(n, k));
    shifted.push_back(f[j] - Polynomial::constant(n, f[j].constant_term()));
  }
  auto linear_inv = linear.inverse();
  if (!linear_inv) {
    cert.status = InverseStatus::singular_linear_part;
    return cert;
  }

  // Normalized map X + H with H of order >= 2.
  std::vector<Polynomial> normalized(n, Polynomial(n));
  std::vector<Polynomial> higher;
  higher.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) normalized[j] += (*linear_inv)(j, k) * shifted[k];
    higher.push_back(normalized[j] - Polynomial::variable(n, j));
  }
  const PolyMap normalized_map(normalized);

  // The degree-d part of H(G) only involves parts of G below degree d, so the
  // fixed point can be filled in one homogeneous degree at a time.
  std::vector<Polynomial> g;
  for (std::size_t j = 0; j < n; ++j) g.push_back(Polynomial::variable(n, j));
  for (long d = 2; d <= bound; ++d) {
    bool all_zero = true;
    std::vector<Polynomial> parts;
    parts.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial part = -higher[j].substitute(g, d).homogeneous_part(d);
      all_zero = all_zero && part.is_zero();
      parts.push_back(std::move(part));
    }
    for (std::size_t j = 0; j < n; ++j) g[j] += parts[j];
    // A vanishing degree is where the iteration can have stabilized; it has
    // iff the current truncation already inverts the normalized map.
    if (all_zero && !left_residual(PolyMap(g), normalized_map)) break;
  }

  // Undo the normalization: candidate(Y) = G(L^-1 (Y - f(0))).
  std::vector<Polynomial> pre;
  pre.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial p(n);
    for (std::size_t m = 0; m < n; ++m) {
      p += (*linear_inv)(k, m) * (Polynomial::variable(n, m) - Polynomial::constant(n, f[m].constant_term()));
    }
    pre.push_back(std::move(p));
  }
  std::vector<Polynomial> candidate;
  candidate.reserve(n);
  for (const auto& gj : g) candidate.push_back(gj.substitute(pre));
  PolyMap inverse(std::move(candidate));

  if (auto residual = left_residual(inverse, f)) {
    cert.status = InverseStatus::not_polynomial_within_bound;
    cert.witness = std::move(residual);
    return cert;
  }
  cert.verified = verify_inverse(f, inverse);
  cert.status = cert.verified ? InverseStatus::inverse_found : InverseStatus::not_polynomial_within_bound;
  if (!cert.verified) cert.witness = left_residual(f, inverse);
  cert.inverse = std::move(inverse);
  if (!cert.verified) cert.inverse.reset();
  return cert;
}

InverseCertificate groebner_inverse(const PolyMap& f, std::stop_token stop) {
  const std::size_t n = f.arity();
  const std::size_t m = 2 * n;
  InverseCertificate cert;
  cert.method = InverseMethod::groebner;
  cert.degree_bound_used = inverse_degree_bound(f);
  for (std::size_t i = 0; i < n; ++i) cert.witness_variables.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) cert.witness_variables.push_back("y" + std::to_string(i + 1));

  std::vector<Polynomial> x_vars;
  for (std::size_t k = 0; k < n; ++k) x_vars.push_back(Polynomial::variable(m, k));
  std::vector<Polynomial> generators;
  for (std::size_t k = 0; k < n; ++k) {
    generators.push_back(Polynomial::variable(m, n + k) - f[k].substitute(x_vars));
  }
  const TermOrder order = TermOrder::block(n);
  const std::vector<Polynomial> basis = buchberger(generators, order, stop);

  // Pull y_k back to variable k of the n-variable ring.
  std::vector<Polynomial> pullback(m, Polynomial(n));
  for (std::size_t k = 0; k < n; ++k) pullback[n + k] = Polynomial::variable(n, k);

  std::vector<std::optional<Polynomial>> inverse(n);
  for (const auto& g : basis) {
    const Monomial lm = leading_monomial(g, order);
    std::optional<std::size_t> index;
    if (lm.degree() == 1 && lm.degree(0, n) == 1) {
      for (std::size_t k = 0; k < n; ++k) {
        if (lm[k] == 1) index = k;
      }
    }
    bool shaped = index.has_value() && !inverse[*index].has_value();
    Polynomial rest = index ? x_vars[*index] - g : Polynomial(m);
    if (shaped) {
      for (const auto& t : rest.terms()) {
        if (t.monomial.degree(0, n) != 0) {
          shaped = false;
          break;
        }
      }
    }
    if (!shaped) {
      cert.status = InverseStatus::not_invertible_groebner;
      cert.witness = g;
      return cert;
    }
    inverse[*index] = rest.substitute(pullback);
  }
  std::vector<Polynomial> comps;
  for (auto& c : inverse) {
    if (!c) {
      cert.status = InverseStatus::not_invertible_groebner;
      return cert;
    }
    comps.push_back(std::move(*c));
  }
  PolyMap g(std::move(comps));
  cert.verified = verify_inverse(f, g);
  if (!cert.verified) {
    cert.status = InverseStatus::not_invertible_groebner;
    cert.witness = left_residual(g, f);
    cert.witness_variables = positional_names(n);
    return cert;
  }
  cert.status = InverseStatus::inverse_found;
  cert.inverse = std::move(g);
  return cert;
}

}  // namespace jc::inv
