#pragma once

#include "jc/coefficient.hpp"
#include "jc/monomial.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jc {

struct Term {
  Monomial monomial;
  Coefficient coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Names variable i (0-based) when printing.
using VariableNamer = std::function<std::string(std::size_t)>;

/// Default positional naming x1..xn.
std::string positional_name(std::size_t index);

/// Sparse exact polynomial in a fixed number of variables.
///
/// Terms are kept strictly descending in graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality. Values are
/// immutable from the outside; every operation returns a new polynomial.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  /// Builds a canonical polynomial from arbitrary (unsorted, duplicated,
  /// possibly zero) terms.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static Polynomial constant(std::size_t nvars, const Coefficient& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Coefficient& c);

  std::size_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// -1 for the zero polynomial.
  long degree() const;
  /// Smallest total degree of a term; -1 for zero.
  long order() const;
  bool is_homogeneous(long d) const;
  Domain domain() const;

  Coefficient constant_term() const;
  Coefficient coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.front(); }

  /// Sum of the terms of total degree exactly d.
  Polynomial homogeneous_part(long d) const;
  /// Drops terms of total degree greater than d.
  Polynomial truncated(long d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Coefficient& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned k) const;

  /// Product with every term of degree > max_degree discarded.
  static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, long max_degree);

  Coefficient evaluate(std::span<const Coefficient> point) const;
  Polynomial derivative(std::size_t var) const;

  /// Replaces variable i by images[i]; the result lives in the images' ring.
  /// With max_degree set, terms above it are dropped as the result is built.
  Polynomial substitute(std::span<const Polynomial> images,
                        std::optional<long> max_degree = std::nullopt) const;

  Polynomial real_part() const;
  Polynomial imag_part() const;

  /// Exact quotient by a nonzero divisor; throws std::domain_error when the
  /// division leaves a remainder.
  Polynomial divide_exact(const Polynomial& divisor) const;

  std::string to_string(const VariableNamer& name = positional_name) const;

 private:
  void check_ring(const Polynomial& o) const;

  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace jc
