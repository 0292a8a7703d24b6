#include "jc/forms.hpp"

#include <stdexcept>

namespace jc::forms {

CubicLinearSpec::CubicLinearSpec(CoeffMatrix a) : a_(std::move(a)) {
  if (!a_.is_square() || a_.rows() == 0) throw std::invalid_argument("cubic-linear matrix must be square and non-empty");
}

std::vector<Polynomial> linear_forms(const CubicLinearSpec& spec) {
  const std::size_t n = spec.dimension();
  std::vector<Polynomial> forms;
  forms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) terms.push_back(Term{Monomial::variable(n, j), spec.matrix()(k, j)});
    forms.push_back(Polynomial::from_terms(n, std::move(terms)));
  }
  return forms;
}

PolyMap cubic_linear_map(const CubicLinearSpec& spec) {
  const std::size_t n = spec.dimension();
  auto forms = linear_forms(spec);
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) comps.push_back(Polynomial::variable(n, k) + forms[k].pow(3));
  return PolyMap(std::move(comps));
}

PolyMatrix squared_diag_times_a(const CubicLinearSpec& spec) {
  const std::size_t n = spec.dimension();
  auto forms = linear_forms(spec);
  PolyMatrix m(n, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial sq = forms[j].pow(2);
    for (std::size_t k = 0; k < n; ++k) m.set(j, k, spec.matrix()(j, k) * sq);
  }
  return m;
}

PolyMatrix a_times_squared_diag(const CubicLinearSpec& spec) {
  const std::size_t n = spec.dimension();
  auto forms = linear_forms(spec);
  std::vector<Polynomial> squares;
  squares.reserve(n);
  for (const auto& f : forms) squares.push_back(f.pow(2));
  PolyMatrix m(n, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m.set(j, k, spec.matrix()(j, k) * squares[k]);
  }
  return m;
}

KellerCheck check_keller(const PolyMap& f) {
  Polynomial det = determinant(jacobian(f));
  const bool keller = det.is_constant() && !det.is_zero();
  return KellerCheck{keller, std::move(det)};
}

bool check_yagzhev(const PolyMap& f) {
  const std::size_t n = f.arity();
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial h = f[k] - Polynomial::variable(n, k);
    if (!h.is_zero() && !h.is_homogeneous(3)) return false;
  }
  return true;
}

namespace {

bool unit_determinant(const PolyMatrix& m) {
  Polynomial det = determinant(m);
  return det == Polynomial::constant(m.nvars(), Coefficient(1));
}

}  // namespace

FormReport check_dmap(const CubicLinearSpec& spec) {
  const std::size_t n = spec.dimension();
  PolyMap f = cubic_linear_map(spec);
  PolyMatrix m = squared_diag_times_a(spec);

  FormReport report;
  auto keller = check_keller(f);
  report.is_keller = keller.is_keller;
  report.keller_det = std::move(keller.det);
  report.is_yagzhev = true;
  report.nilpotency_index = nilpotency_index(m, static_cast<unsigned>(n));
  report.is_dmap = report.nilpotency_index.has_value();
  report.unit_det = unit_determinant(PolyMatrix::identity(n, n) + Coefficient(3) * m);
  return report;
}

bool check_prop1(const CubicLinearSpec& spec, const Coefficient& lambda) {
  const std::size_t n = spec.dimension();
  return unit_determinant(PolyMatrix::identity(n, n) + lambda * a_times_squared_diag(spec));
}

namespace {

std::optional<mpq_class> rational_cube_root(const mpq_class& q) {
  auto root = [](const mpz_class& z) -> std::optional<mpz_class> {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), 3) == 0) return std::nullopt;
    return r;
  };
  auto num = root(q.get_num());
  auto den = root(q.get_den());
  if (!num || !den) return std::nullopt;
  mpq_class r(*num, *den);
  r.canonicalize();
  return r;
}

// Cube roots inside Q(i) for real and purely imaginary values; since the
// cube roots of unity other than 1 lie outside Q(i), the root is unique.
std::optional<Coefficient> cube_root(const Coefficient& c) {
  if (c.is_real()) {
    auto r = rational_cube_root(c.re());
    if (!r) return std::nullopt;
    return Coefficient(*r);
  }
  if (sgn(c.re()) == 0) {
    // (-s i)^3 = s^3 i
    auto r = rational_cube_root(c.im());
    if (!r) return std::nullopt;
    return Coefficient(mpq_class(0), mpq_class(-*r));
  }
  return std::nullopt;
}

}  // namespace

std::optional<CubicLinearSpec> recognize_cubic_linear(const PolyMap& f) {
  const std::size_t n = f.arity();
  if (n == 0) return std::nullopt;
  CoeffMatrix a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial h = f[k] - Polynomial::variable(n, k);
    if (h.is_zero()) continue;
    if (!h.is_homogeneous(3)) return std::nullopt;
    std::optional<std::size_t> pivot;
    Coefficient pivot_cube;
    for (std::size_t j = 0; j < n && !pivot; ++j) {
      Coefficient c = h.coefficient(Monomial::variable(n, j, 3));
      if (!c.is_zero()) {
        pivot = j;
        pivot_cube = c;
      }
    }
    if (!pivot) return std::nullopt;
    auto root = cube_root(pivot_cube);
    if (!root) return std::nullopt;
    const Coefficient denom = Coefficient(3) * root->pow(2);
    for (std::size_t m = 0; m < n; ++m) {
      if (m == *pivot) {
        a(k, m) = *root;
        continue;
      }
      Monomial mono = Monomial::variable(n, *pivot, 2);
      mono[m] += 1;
      a(k, m) = h.coefficient(mono) / denom;
    }
    std::vector<Term> terms;
    for (std::size_t m = 0; m < n; ++m) terms.push_back(Term{Monomial::variable(n, m), a(k, m)});
    if (Polynomial::from_terms(n, std::move(terms)).pow(3) != h) return std::nullopt;
  }
  return CubicLinearSpec(std::move(a));
}

FormReport classify(const PolyMap& f) {
  if (auto spec = recognize_cubic_linear(f)) return check_dmap(*spec);
  FormReport report;
  auto keller = check_keller(f);
  report.is_keller = keller.is_keller;
  report.keller_det = std::move(keller.det);
  report.is_yagzhev = check_yagzhev(f);
  return report;
}

std::vector<Polynomial> wang_identity_residual(const PolyMap& p) {
  const std::size_t n = p.arity();
  if (p.degree() > 2) {
    throw std::invalid_argument("Wang identity needs components of degree <= 2, got degree " +
                                std::to_string(p.degree()));
  }
  const std::size_t m = 2 * n;
  std::vector<Polynomial> xs;
  std::vector<Polynomial> ys;
  std::vector<Polynomial> mid;
  std::vector<Polynomial> diff;
  const Coefficient half = Coefficient::fraction(1, 2);
  for (std::size_t k = 0; k < n; ++k) {
    xs.push_back(Polynomial::variable(m, k));
    ys.push_back(Polynomial::variable(m, n + k));
    mid.push_back(half * (xs.back() + ys.back()));
    diff.push_back(xs.back() - ys.back());
  }
  PolyMatrix j_mid = jacobian(p).substitute(mid);
  std::vector<Polynomial> residual;
  residual.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial res = p[r].substitute(xs) - p[r].substitute(ys);
    for (std::size_t c = 0; c < n; ++c) res -= j_mid(r, c) * diff[c];
    residual.push_back(std::move(res));
  }
  return residual;
}

}  // namespace jc::forms
