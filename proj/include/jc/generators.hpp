#pragma once

#include "jc/coeff_matrix.hpp"
#include "jc/forms.hpp"

#include <random>

namespace jc::forms {

/// Entries drawn uniformly from [lo, hi].
CoeffMatrix random_integer_matrix(std::size_t n, long lo, long hi, std::mt19937_64& rng);

/// Strictly upper triangular with entries in [lo, hi].
CoeffMatrix random_strictly_upper(std::size_t n, long lo, long hi, std::mt19937_64& rng);

/// Invertible rational matrix with small integer entries (retries until the
/// determinant is nonzero).
CoeffMatrix random_invertible(std::size_t n, std::mt19937_64& rng);

/// S N S^-1 for random strictly upper N and random invertible S. Always
/// nilpotent, but only sometimes a D-map.
CoeffMatrix random_nilpotent_conjugate(std::size_t n, std::mt19937_64& rng);

/// P D N D^-1 P^T with N strictly upper, D a nonzero rational diagonal and
/// P a permutation. Conjugation by such monomial matrices keeps
/// (AX)^{Delta 2} A nilpotent, so the result is always a D-map. With the
/// gaussian domain the entries of N are a + b i.
CubicLinearSpec random_dmap_spec(std::size_t n, std::mt19937_64& rng, Domain domain = Domain::rational);

}  // namespace jc::forms
