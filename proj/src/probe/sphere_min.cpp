#include "jc/probe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace jc::probe::detail {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

// Uniform in (0, 1) from the counter-th draw of a keyed stream.
double uniform_open(std::uint64_t key, std::uint64_t counter) {
  const std::uint64_t bits = splitmix64(key ^ splitmix64(counter)) >> 11U;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

bool lexicographic_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

bool better(const SphereResult& a, const SphereResult& b) {
  if (a.value != b.value) return a.value < b.value;
  return lexicographic_less(a.point, b.point);
}

}  // namespace

Vector start_direction(std::uint64_t seed, std::uint64_t stream, std::uint64_t restart, Eigen::Index dim) {
  const std::uint64_t key = splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ restart);
  Vector v(dim);
  std::uint64_t counter = 0;
  do {
    for (Eigen::Index i = 0; i < dim; ++i) {
      // Box-Muller, one normal per pair of draws.
      const double u1 = uniform_open(key, counter++);
      const double u2 = uniform_open(key, counter++);
      v(i) = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
  } while (v.norm() == 0.0);
  return v / v.norm();
}

SphereResult minimize_on_sphere(const SphereObjective& objective, Vector start, const ProbeConfig& config) {
  SphereResult result;
  Vector c = start / start.norm();
  Vector grad(c.size());
  double value = objective(c, grad);
  double step = config.initial_step;
  Vector trial_grad(c.size());

  for (unsigned it = 0; it < config.max_iterations; ++it) {
    result.iterations = it + 1;
    const Vector tangent = grad - grad.dot(c) * c;
    const double gnorm = tangent.norm();
    if (!(gnorm > 0.0) || !std::isfinite(gnorm)) {
      result.converged = true;
      break;
    }
    const Vector dir = -tangent / gnorm;

    double t = std::min(step, std::numbers::pi / 2);
    bool accepted = false;
    Vector trial;
    double trial_value = value;
    while (t >= config.min_step) {
      // Geodesic step keeps the iterate on the unit sphere.
      trial = std::cos(t) * c + std::sin(t) * dir;
      trial.normalize();
      trial_value = objective(trial, trial_grad);
      if (trial_value <= value - 1e-4 * t * gnorm && trial_value < value) {
        accepted = true;
        break;
      }
      t *= config.step_shrink;
    }
    if (!accepted) {
      result.converged = true;
      break;
    }
    const double change = (value - trial_value) / std::max(std::abs(value), 1e-300);
    c = trial;
    value = trial_value;
    grad = trial_grad;
    step = 2.0 * t;
    if (change < config.convergence_tol) {
      result.converged = true;
      break;
    }
  }
  result.point = c;
  result.value = value;
  return result;
}

SphereResult multistart(const SphereObjective& objective, Eigen::Index dim, const ProbeConfig& config,
                        std::uint64_t stream, const std::optional<Vector>& warm_start) {
  const unsigned restarts = std::max(1U, config.restarts);
  std::vector<SphereResult> results(restarts);
  auto run = [&](unsigned r) {
    Vector start = (r == 0 && warm_start && warm_start->norm() > 0.0) ? *warm_start
                                                                        : start_direction(config.seed, stream, r, dim);
    results[r] = minimize_on_sphere(objective, std::move(start), config);
  };

  const unsigned workers = std::clamp(config.threads, 1U, restarts);
  if (workers == 1) {
    for (unsigned r = 0; r < restarts; ++r) run(r);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (unsigned r = w; r < restarts; r += workers) run(r);
      });
    }
  }

  SphereResult best = results[0];
  for (unsigned r = 1; r < restarts; ++r) {
    if (better(results[r], best)) best = results[r];
  }
  return best;
}

}  // namespace jc::probe::detail
