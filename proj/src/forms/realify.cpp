#include "jc/forms.hpp"

#include <random>

namespace jc::forms {

std::string realified_name(std::size_t index) {
  return (index % 2 == 0 ? "y" : "z") + std::to_string(index / 2 + 1);
}

PolyMap realify(const PolyMap& f) {
  const std::size_t n = f.arity();
  const std::size_t m = 2 * n;
  const Polynomial i_unit = Polynomial::constant(m, Coefficient::imaginary_unit());
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    images.push_back(Polynomial::variable(m, 2 * k) + i_unit * Polynomial::variable(m, 2 * k + 1));
  }
  std::vector<Polynomial> comps;
  comps.reserve(m);
  for (const auto& p : f.components()) {
    Polynomial complexified = p.substitute(images);
    comps.push_back(complexified.real_part());
    comps.push_back(complexified.imag_part());
  }
  return PolyMap(std::move(comps));
}

RealifyDetResult realify_det_check(const PolyMap& f, unsigned samples, std::uint64_t seed) {
  const std::size_t n = f.arity();
  const PolyMatrix j_complex = jacobian(f);
  const PolyMatrix j_real = jacobian(realify(f));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numer(-9, 9);
  std::uniform_int_distribution<long> denom(1, 5);

  RealifyDetResult result;
  for (unsigned s = 0; s < samples; ++s) {
    RealifyDetSample sample;
    std::vector<Coefficient> x(n);
    for (std::size_t k = 0; k < n; ++k) {
      const long y_num = numer(rng);
      const long y_den = denom(rng);
      const long z_num = numer(rng);
      const long z_den = denom(rng);
      Coefficient y = Coefficient::fraction(y_num, y_den);
      Coefficient z = Coefficient::fraction(z_num, z_den);
      sample.point.push_back(y);
      sample.point.push_back(z);
      x[k] = y + Coefficient::imaginary_unit() * z;
    }
    sample.real_det = j_real.evaluate(sample.point).determinant();
    sample.complex_det = j_complex.evaluate(x).determinant();
    sample.agrees = sample.real_det == Coefficient(sample.complex_det.norm2());
    result.ok = result.ok && sample.agrees;
    result.samples.push_back(std::move(sample));
  }
  return result;
}

}  // namespace jc::forms
