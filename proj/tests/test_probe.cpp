#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jc/forms.hpp"
#include "jc/generators.hpp"
#include "jc/probe.hpp"

#include <cmath>
#include <random>

using namespace jc::probe;

namespace {

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

const Matrix jordan = mat2(0, 1, 0, 0);

ProbeConfig quick() {
  ProbeConfig c;
  c.restarts = 4;
  return c;
}

Vector gaussian_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> d;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(RealMatrixSpec::make(Matrix(2, 3)), std::invalid_argument);
  Matrix bad = jordan;
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(RealMatrixSpec::make(bad), std::invalid_argument);
  ProbeConfig c;
  c.factor = 1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ProbeConfig{};
  c.tol_zero = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ProbeConfig{};
  c.sigma = -1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(ProbeConfig{}.radii().size() == 6);
  CHECK(ProbeConfig{}.radii().back() == doctest::Approx(1e6));
}

TEST_CASE("decomposition examples") {
  auto d = decompose(RealMatrixSpec::make(jordan), 1e-10);
  REQUIRE(d.kernel_basis.cols() == 1);
  REQUIRE(d.rowspace_basis.cols() == 1);
  REQUIRE(d.colspace_gram_basis.cols() == 1);
  CHECK(std::abs(d.kernel_basis(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(d.rowspace_basis(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(d.colspace_gram_basis(0, 0)) == doctest::Approx(1.0));
  REQUIRE(d.delta1.has_value());
  CHECK(*d.delta1 == doctest::Approx(1.0));

  d = decompose(RealMatrixSpec::make(Matrix::Identity(2, 2)), 1e-10);
  CHECK(d.kernel_basis.cols() == 0);
  CHECK(d.rowspace_basis.cols() == 2);
  CHECK(*d.delta1 == doctest::Approx(1.0));

  d = decompose(RealMatrixSpec::make(Matrix::Zero(3, 3)), 1e-10);
  CHECK(d.rowspace_basis.cols() == 0);
  CHECK(d.kernel_basis.cols() == 3);
  CHECK_FALSE(d.delta1.has_value());
  CHECK_THROWS_AS(decompose(RealMatrixSpec::make(jordan), 0.0), std::invalid_argument);
}

TEST_CASE("decomposition splits vectors orthogonally") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + trial % 4;
    Matrix a = Matrix::Zero(n, n);
    // Rank-deficient by construction: product of n x r and r x n factors.
    const Eigen::Index r = 1 + trial % n;
    Matrix left(n, r);
    Matrix right(r, n);
    for (Eigen::Index i = 0; i < n * r; ++i) {
      left.data()[i] = gaussian_vector(rng, 1)(0);
      right.data()[i] = gaussian_vector(rng, 1)(0);
    }
    a = left * right;
    const auto d = decompose(RealMatrixSpec::make(a), 1e-10);
    CHECK(d.kernel_basis.cols() + d.rowspace_basis.cols() == n);
    if (d.kernel_basis.cols() > 0) {
      CHECK((d.kernel_basis.transpose() * d.rowspace_basis).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((a * d.kernel_basis).norm() <= 1e-9 * a.norm());
    }
    const Vector z = gaussian_vector(rng, n);
    const Vector x = d.kernel_basis * (d.kernel_basis.transpose() * z);
    const Vector y = d.rowspace_basis * (d.rowspace_basis.transpose() * z);
    CHECK((z - (x + y)).norm() <= 1e-9 * z.norm());
    CHECK(std::abs(x.dot(y)) <= 1e-9 * x.norm() * y.norm() + 1e-300);
    REQUIRE(d.delta1.has_value());
    CHECK(*d.delta1 > 0);
    for (int k = 0; k < 100 / 30 + 1; ++k) {
      Vector u = d.rowspace_basis * gaussian_vector(rng, d.rowspace_basis.cols());
      u.normalize();
      CHECK((a * u).norm() >= *d.delta1 * (1 - 1e-8));
    }
  }
}

TEST_CASE("cosine ratio examples") {
  const auto spec = RealMatrixSpec::make(jordan);
  CHECK(cosine_ratio(spec, vec2(-1000, 10)) == doctest::Approx(-1 / std::sqrt(1 + 1e-4)).epsilon(1e-12));
  CHECK(cosine_ratio(RealMatrixSpec::make(Matrix::Identity(2, 2)), vec2(1, 0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(cosine_ratio(spec, vec2(5, 0)), UndefinedRatio);
  try {
    cosine_ratio(spec, vec2(0, 0));
    CHECK(false);
  } catch (const UndefinedRatio& e) {
    CHECK(e.reason() == UndefinedRatio::Reason::zero_point);
  }
  const auto hat = RealMatrixSpec::make(jordan, MapForm::hat);
  CHECK_THROWS_AS(cosine_ratio(hat, vec2(1, 0)), UndefinedRatio);
  CHECK(cosine_ratio(hat, vec2(-8, 2)) == doctest::Approx(-8.0 * 8.0 / (std::sqrt(68.0) * 8.0)));
}

TEST_CASE("cosine ratio stays in [-1, 1] and follows the closed form") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n * n; ++i) a.data()[i] = gaussian_vector(rng, 1)(0);
    const Vector u = gaussian_vector(rng, n) * std::pow(10.0, trial % 7 - 3);
    for (auto form : {MapForm::standard, MapForm::hat}) {
      const double r = cosine_ratio(RealMatrixSpec::make(a, form), u);
      CHECK(r >= -1.0);
      CHECK(r <= 1.0);
    }
  }
  const auto spec = RealMatrixSpec::make(jordan);
  double previous = 0.0;
  for (double t : {0.5, 1.0, 2.0, 10.0, 100.0}) {
    const double r = cosine_ratio(spec, vec2(-t * t * t, t));
    CHECK(r == doctest::Approx(-std::pow(t, 3) / std::sqrt(std::pow(t, 6) + t * t)).epsilon(1e-12));
    CHECK(r < previous);
    previous = r;
  }
}

TEST_CASE("sphere minimization examples") {
  const ProbeConfig config = quick();
  auto rec = min_image_on_sphere(RealMatrixSpec::make(Matrix::Zero(2, 2)), 7.0, std::nullopt, config);
  CHECK(rec.image_norm == doctest::Approx(7.0));

  const double t = 10.0;
  const double radius = std::sqrt(std::pow(t, 6) + t * t);
  rec = min_image_on_sphere(RealMatrixSpec::make(jordan), radius, std::nullopt, config);
  CHECK(rec.image_norm <= 10.0 + 1e-6);
  CHECK(rec.best_point.norm() == doctest::Approx(radius).epsilon(1e-8));
  REQUIRE(rec.alpha.has_value());
  CHECK(*rec.alpha >= 0.0);
  CHECK(*rec.alpha <= 1.0);
  if (rec.v) CHECK(rec.v->norm() == doctest::Approx(1.0).epsilon(1e-8));
  if (rec.w) CHECK(rec.w->norm() == doctest::Approx(1.0).epsilon(1e-8));

  const auto hat = RealMatrixSpec::make(jordan, MapForm::hat);
  const auto d = decompose(hat, 1e-10);
  rec = min_image_on_sphere(hat, 3.0, d.colspace_gram_basis, config);
  CHECK(rec.image_norm == doctest::Approx(3.0));
}

TEST_CASE("sphere minimizer on a quadratic objective") {
  // Minimizing x^T D x on the unit sphere picks the smallest eigenvalue.
  Vector diag(3);
  diag << 3.0, 0.5, 2.0;
  detail::SphereObjective q = [&](const Vector& c, Vector& g) {
    g = 2.0 * diag.cwiseProduct(c);
    return c.dot(diag.cwiseProduct(c));
  };
  const auto r = detail::multistart(q, 3, quick(), 1, std::nullopt);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(std::abs(r.point(1)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("start directions are deterministic unit vectors") {
  const Vector a = detail::start_direction(1, 2, 3, 5);
  const Vector b = detail::start_direction(1, 2, 3, 5);
  CHECK(a == b);
  CHECK(a.norm() == doctest::Approx(1.0));
  CHECK(detail::start_direction(1, 2, 4, 5) != a);
  CHECK(detail::start_direction(2, 2, 3, 5) != a);
}

TEST_CASE("restart parallelism does not change results") {
  ProbeConfig serial = quick();
  ProbeConfig parallel = serial;
  parallel.threads = 3;
  const auto spec = RealMatrixSpec::make(mat2(1, 1, -1, -1));
  const auto a = nonproper_scan(spec, serial);
  const auto b = nonproper_scan(spec, parallel);
  REQUIRE(a.trajectory.size() == b.trajectory.size());
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    CHECK(a.trajectory[i].best_point == b.trajectory[i].best_point);
    CHECK(a.trajectory[i].image_norm == b.trajectory[i].image_norm);
  }
}

TEST_CASE("scan examples") {
  const ProbeConfig config = quick();
  auto report = nonproper_scan(RealMatrixSpec::make(jordan), config);
  CHECK(report.verdict == Verdict::image_grows);
  REQUIRE(report.ratio_limit_estimate.has_value());
  CHECK(*report.ratio_limit_estimate <= -0.9999);
  REQUIRE(report.growth_exponent.has_value());
  CHECK(*report.growth_exponent == doctest::Approx(1.0 / 3.0).epsilon(0.05 * 3));

  report = nonproper_scan(RealMatrixSpec::make(Matrix::Zero(2, 2)), config);
  CHECK(report.verdict == Verdict::image_grows);
  for (const auto& r : report.trajectory) CHECK(r.image_norm == doctest::Approx(r.radius));

  report = nonproper_scan(RealMatrixSpec::make(mat2(1, 1, -1, -1)), config);
  CHECK(report.verdict == Verdict::image_grows);
}

TEST_CASE("brute-force angular grid agrees with the rank-one scan") {
  // Oracle: dense angular grid on each circle.
  const auto spec = RealMatrixSpec::make(mat2(1, 1, -1, -1));
  const auto report = nonproper_scan(spec, quick());
  for (const auto& rec : report.trajectory) {
    double best = INFINITY;
    const int steps = 200000;
    for (int k = 0; k < steps; ++k) {
      const double th = 2 * M_PI * k / steps;
      best = std::min(best, image(spec, vec2(rec.radius * std::cos(th), rec.radius * std::sin(th))).norm());
    }
    CHECK(rec.image_norm <= best * (1 + 1e-6) + 1e-9);
  }
  CHECK(report.trajectory.back().image_norm > report.trajectory.front().image_norm);
}

TEST_CASE("bounded-image candidates get a gamma fit and a witness check") {
  // Hat form with A = -I: U - U^{*3} vanishes at (+-1, 0) and (0, +-1), so
  // every radius of this (nearly constant) schedule has a zero image.
  ProbeConfig config = quick();
  config.r0 = 1.0;
  config.factor = 1.0 + 1e-9;
  config.count = 3;
  const auto spec = RealMatrixSpec::make(-Matrix::Identity(2, 2), MapForm::hat);
  const auto report = nonproper_scan(spec, config);
  CHECK(report.verdict == Verdict::bounded_image_candidate);
  REQUIRE(report.gamma_fit.has_value());
  CHECK(report.gamma_fit->gamma == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(report.gamma_fit->residual <= 1e-4);
  CHECK_FALSE(report.gamma_fit->clamped);
  bool evidence_note = false;
  for (const auto& n : report.notes) evidence_note = evidence_note || n.find("never a proof") != std::string::npos;
  CHECK(evidence_note);
}

TEST_CASE("a growing image below sigma is not a bounded candidate") {
  // Radii 10 and 100 give image norms near 2.1 and 4.6: below sigma, but growing.
  ProbeConfig config = quick();
  config.count = 2;
  const auto report = nonproper_scan(RealMatrixSpec::make(jordan), config);
  CHECK(report.trajectory.back().image_norm < config.sigma);
  CHECK(report.verdict == Verdict::inconclusive);
  CHECK_FALSE(report.gamma_fit.has_value());
}

TEST_CASE("witness check examples") {
  const ProbeConfig config;
  CHECK(witness_check(RealMatrixSpec::make(jordan), vec2(0, 1), config).passed);
  CHECK_FALSE(witness_check(RealMatrixSpec::make(jordan), vec2(1, 0), config).passed);
  std::mt19937_64 rng(83);
  for (int k = 0; k < 20; ++k) {
    CHECK_FALSE(witness_check(RealMatrixSpec::make(Matrix::Identity(2, 2)), gaussian_vector(rng, 2), config).passed);
  }
}

TEST_CASE("witness search examples") {
  const ProbeConfig config = quick();
  auto r = witness_search(RealMatrixSpec::make(jordan), config);
  REQUIRE(r.witness.has_value());
  CHECK(std::abs((*r.witness)(1)) == doctest::Approx(1.0));
  CHECK(std::abs((*r.witness)(0)) <= 1e-9);

  r = witness_search(RealMatrixSpec::make(Matrix::Identity(2, 2)), config);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.best_residual == doctest::Approx(0.5).epsilon(1e-6));
  r = witness_search(RealMatrixSpec::make(Matrix::Identity(3, 3)), config);
  CHECK(r.best_residual == doctest::Approx(1.0 / 3.0).epsilon(1e-6));

  CHECK_THROWS_AS(witness_search(RealMatrixSpec::make(Matrix::Zero(2, 2)), config), RowspaceEmpty);
}

TEST_CASE("unit determinant of the scaled family in floating point") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> lam(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto spec = jc::forms::random_dmap_spec(n, rng);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = spec.matrix()(i, j).to_double();
      }
    }
    const Vector u = gaussian_vector(rng, static_cast<Eigen::Index>(n));
    CHECK(std::abs(scaled_family_determinant(a, u, lam(rng)) - 1.0) <= 1e-6);
  }
}
