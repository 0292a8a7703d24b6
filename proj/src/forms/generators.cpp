#include "jc/generators.hpp"

#include <algorithm>
#include <numeric>

namespace jc::forms {

CoeffMatrix random_integer_matrix(std::size_t n, long lo, long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(lo, hi);
  CoeffMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Coefficient(dist(rng));
  }
  return m;
}

CoeffMatrix random_strictly_upper(std::size_t n, long lo, long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(lo, hi);
  CoeffMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = Coefficient(dist(rng));
  }
  return m;
}

CoeffMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    CoeffMatrix s = random_integer_matrix(n, -2, 2, rng);
    if (!s.determinant().is_zero()) return s;
  }
}

CoeffMatrix random_nilpotent_conjugate(std::size_t n, std::mt19937_64& rng) {
  const CoeffMatrix nil = random_strictly_upper(n, -3, 3, rng);
  const CoeffMatrix s = random_invertible(n, rng);
  return s * nil * *s.inverse();
}

CubicLinearSpec random_dmap_spec(std::size_t n, std::mt19937_64& rng, Domain domain) {
  CoeffMatrix nil = random_strictly_upper(n, -3, 3, rng);
  if (domain == Domain::gaussian) {
    const CoeffMatrix im = random_strictly_upper(n, -2, 2, rng);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) nil(i, j) += Coefficient::imaginary_unit() * im(i, j);
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<long> num(1, 3);
  std::uniform_int_distribution<long> den(1, 2);
  std::bernoulli_distribution negative(0.5);
  CoeffMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    long p = num(rng);
    if (negative(rng)) p = -p;
    s(perm[i], i) = Coefficient::fraction(p, den(rng));
  }
  return CubicLinearSpec(s * nil * *s.inverse());
}

}  // namespace jc::forms
