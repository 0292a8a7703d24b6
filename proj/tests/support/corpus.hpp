#pragma once

// Random inputs shared by the unit and acceptance tests.

#include "jc/coeff_matrix.hpp"
#include "jc/poly_map.hpp"

#include <random>
#include <vector>

namespace jc::testing {

inline Coefficient random_coefficient(std::mt19937_64& rng, long lo, long hi, bool gaussian = false) {
  std::uniform_int_distribution<long> d(lo, hi);
  if (!gaussian) return Coefficient(d(rng));
  return Coefficient(mpq_class(d(rng)), mpq_class(d(rng)));
}

inline Coefficient random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  return Coefficient::fraction(num(rng), den(rng));
}

inline std::vector<Coefficient> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Coefficient> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng));
  return p;
}

/// Every monomial of degree <= max_degree kept with probability density.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, long lo, long hi,
                                    double density = 0.5, bool gaussian = false) {
  std::bernoulli_distribution keep(density);
  std::vector<Term> terms;
  std::vector<Monomial::Exponent> e(nvars, 0);
  // Odometer over exponent vectors with total degree <= max_degree.
  for (;;) {
    unsigned deg = 0;
    for (auto x : e) deg += x;
    if (deg <= max_degree && keep(rng)) {
      Coefficient c = random_coefficient(rng, lo, hi, gaussian);
      if (!c.is_zero()) terms.push_back(Term{Monomial(e), c});
    }
    std::size_t i = 0;
    while (i < nvars) {
      if (++e[i] <= max_degree) break;
      e[i] = 0;
      ++i;
    }
    if (i == nvars) break;
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

inline PolyMap random_map(std::mt19937_64& rng, std::size_t n, unsigned max_degree, long lo, long hi,
                          double density = 0.5, bool gaussian = false) {
  std::vector<Polynomial> comps;
  for (std::size_t k = 0; k < n; ++k) comps.push_back(random_polynomial(rng, n, max_degree, lo, hi, density, gaussian));
  return PolyMap(std::move(comps));
}

/// Square matrix with entries in [lo, hi], each zeroed with probability
/// sparsity.
inline CoeffMatrix random_sparse_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi, double sparsity) {
  std::bernoulli_distribution zero(sparsity);
  CoeffMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!zero(rng)) m(i, j) = random_coefficient(rng, lo, hi);
    }
  }
  return m;
}

/// A tame automorphism together with the inverse known from its
/// construction.
struct TamePair {
  PolyMap map;
  PolyMap inverse;
};

namespace detail {

inline TamePair elementary(std::mt19937_64& rng, std::size_t n, unsigned max_degree) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t target = pick(rng);
  Polynomial p(n);
  while (p.is_zero() || p.degree() < 2) {
    p = random_polynomial(rng, n, max_degree, -2, 2, 0.35);
    // Drop every term involving the target variable.
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
      if (t.monomial[target] == 0) kept.push_back(t);
    }
    p = Polynomial::from_terms(n, std::move(kept));
    if (n == 1) break;
  }
  std::vector<Polynomial> fwd;
  std::vector<Polynomial> back;
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial x = Polynomial::variable(n, k);
    fwd.push_back(k == target ? x + p : x);
    back.push_back(k == target ? x - p : x);
  }
  return {PolyMap(std::move(fwd)), PolyMap(std::move(back))};
}

inline TamePair affine(std::mt19937_64& rng, std::size_t n) {
  CoeffMatrix l;
  std::optional<CoeffMatrix> inv;
  while (!inv) {
    l = random_sparse_matrix(rng, n, -1, 2, 0.4);
    inv = l.inverse();
  }
  std::vector<Coefficient> shift;
  std::uniform_int_distribution<long> c(-2, 2);
  for (std::size_t k = 0; k < n; ++k) shift.push_back(Coefficient(c(rng)));
  std::vector<Polynomial> fwd;
  std::vector<Polynomial> back;
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial a = Polynomial::constant(n, shift[r]);
    Polynomial b(n);
    for (std::size_t k = 0; k < n; ++k) {
      a += l(r, k) * Polynomial::variable(n, k);
      b += (*inv)(r, k) * (Polynomial::variable(n, k) - Polynomial::constant(n, shift[k]));
    }
    fwd.push_back(std::move(a));
    back.push_back(std::move(b));
  }
  return {PolyMap(std::move(fwd)), PolyMap(std::move(back))};
}

}  // namespace detail

/// Composition of at most three elementary triangular maps (deg p <= 3),
/// optionally followed by an affine map; degree at most max_total.
inline TamePair random_tame(std::mt19937_64& rng, std::size_t n, unsigned max_total = 6) {
  std::uniform_int_distribution<int> count(1, 3);
  std::bernoulli_distribution with_affine(0.3);
  for (;;) {
    TamePair acc{PolyMap::identity(n), PolyMap::identity(n)};
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      TamePair e = detail::elementary(rng, n, 3);
      acc.map = compose(e.map, acc.map);
      acc.inverse = compose(acc.inverse, e.inverse);
    }
    if (with_affine(rng)) {
      TamePair a = detail::affine(rng, n);
      acc.map = compose(a.map, acc.map);
      acc.inverse = compose(acc.inverse, a.inverse);
    }
    if (acc.map.degree() <= static_cast<long>(max_total) && acc.map.degree() >= 2) return acc;
  }
}

}  // namespace jc::testing
