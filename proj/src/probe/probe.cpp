#include "jc/probe.hpp"

#include <cmath>
#include <numeric>

namespace jc::probe {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::bounded_image_candidate:
      return "bounded-image-candidate";
    case Verdict::image_grows:
      return "image-grows";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

void ProbeConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be positive");
  };
  positive(r0, "initial radius");
  positive(initial_step, "initial step");
  positive(min_step, "minimum step");
  positive(convergence_tol, "convergence tolerance");
  positive(ratio_tol, "ratio tolerance");
  positive(tol_zero, "tol_zero");
  positive(tol_nonzero, "tol_nonzero");
  positive(rank_tol, "rank tolerance");
  positive(sigma, "sigma");
  if (!(factor > 1.0)) throw std::invalid_argument("radius factor must exceed 1");
  if (!(step_shrink > 0.0 && step_shrink < 1.0)) throw std::invalid_argument("step shrink must lie in (0, 1)");
  if (count == 0) throw std::invalid_argument("radius count must be positive");
  if (restarts == 0) throw std::invalid_argument("restarts must be positive");
  if (max_iterations == 0) throw std::invalid_argument("max iterations must be positive");
}

std::vector<double> ProbeConfig::radii() const {
  std::vector<double> out;
  out.reserve(count);
  double r = r0;
  for (unsigned i = 0; i < count; ++i) {
    out.push_back(r);
    r *= factor;
  }
  return out;
}

namespace {

// d/dU ||F(U)||^2 = 2 J^T F.
Vector image_gradient(const RealMatrixSpec& spec, const Vector& u, const Vector& f) {
  if (spec.form == MapForm::standard) {
    const Vector au = spec.a * u;
    const Vector scaled = (3.0 * au.array().square() * f.array()).matrix();
    return 2.0 * (f + spec.a.transpose() * scaled);
  }
  const Vector at_f = spec.a.transpose() * f;
  return 2.0 * (f + (3.0 * u.array().square() * at_f.array()).matrix());
}

std::optional<Vector> unit_or_none(const Vector& v) {
  const double n = v.norm();
  if (!(n > 1e-12)) return std::nullopt;
  return Vector(v / n);
}

void fill_shares(RadiusRecord& record, const SubspaceDecomposition& d) {
  const double norm = record.best_point.norm();
  if (norm == 0.0) return;
  const Vector x = record.best_point / norm;
  const Vector kernel_part = d.kernel_basis * (d.kernel_basis.transpose() * x);
  const Vector row_part = d.rowspace_basis * (d.rowspace_basis.transpose() * x);
  record.alpha = std::clamp(kernel_part.norm(), 0.0, 1.0);
  record.v = unit_or_none(kernel_part);
  record.w = unit_or_none(row_part);
}

// Sign-aligned mean of the defined unit vectors among the final records.
std::optional<Vector> limit_direction(const std::vector<RadiusRecord>& traj, std::size_t window,
                                      std::optional<Vector> RadiusRecord::*field) {
  std::optional<Vector> ref;
  Vector sum;
  const std::size_t first = traj.size() > window ? traj.size() - window : 0;
  for (std::size_t i = traj.size(); i-- > first;) {
    const auto& v = traj[i].*field;
    if (!v) continue;
    if (!ref) {
      ref = *v;
      sum = *v;
      continue;
    }
    sum += (v->dot(*ref) < 0.0 ? -1.0 : 1.0) * *v;
  }
  if (!ref) return std::nullopt;
  return unit_or_none(sum);
}

std::optional<double> fit_growth_exponent(const std::vector<RadiusRecord>& traj) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : traj) {
    if (r.image_norm > 0.0 && r.radius > 0.0) {
      xs.push_back(std::log(r.radius));
      ys.push_back(std::log(r.image_norm));
    }
  }
  if (xs.size() < 2) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

// Aitken delta-squared on the final three ratios; falls back to their mean
// when the extrapolation is degenerate or leaves [-1, 1].
std::optional<double> extrapolate_ratio(const std::vector<RadiusRecord>& traj) {
  std::vector<double> rs;
  for (const auto& r : traj) {
    if (r.ratio) rs.push_back(*r.ratio);
  }
  if (rs.empty()) return std::nullopt;
  if (rs.size() < 3) return rs.back();
  const double r1 = rs[rs.size() - 3];
  const double r2 = rs[rs.size() - 2];
  const double r3 = rs[rs.size() - 1];
  const double denom = r3 - 2.0 * r2 + r1;
  if (std::abs(denom) > 1e-14) {
    const double aitken = r3 - (r3 - r2) * (r3 - r2) / denom;
    if (aitken >= -1.0 && aitken <= 1.0) return aitken;
  }
  return (r1 + r2 + r3) / 3.0;
}

}  // namespace

RadiusRecord min_image_on_sphere(const RealMatrixSpec& spec, double radius, const std::optional<Matrix>& subspace,
                                 const ProbeConfig& config, unsigned radius_index,
                                 const std::optional<Vector>& warm_start) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  const Eigen::Index n = spec.dimension();
  const Matrix basis = subspace ? *subspace : Matrix::Identity(n, n);
  if (basis.rows() != n || basis.cols() == 0) throw std::invalid_argument("subspace basis has the wrong shape");

  detail::SphereObjective objective = [&](const Vector& c, Vector& grad) {
    const Vector u = radius * (basis * c);
    const Vector f = image(spec, u);
    grad = radius * (basis.transpose() * image_gradient(spec, u, f));
    return f.squaredNorm();
  };

  std::optional<Vector> warm;
  if (warm_start) warm = Vector(basis.transpose() * *warm_start);
  const auto best = detail::multistart(objective, basis.cols(), config, radius_index, warm);

  RadiusRecord record;
  record.radius = radius;
  record.best_point = radius * (basis * best.point);
  record.image_norm = image(spec, record.best_point).norm();
  record.converged = best.converged;
  record.iterations = best.iterations;
  try {
    record.ratio = cosine_ratio(spec, record.best_point);
  } catch (const UndefinedRatio&) {
    record.ratio.reset();
  }
  fill_shares(record, decompose(spec, config.rank_tol));
  return record;
}

WitnessCheck witness_check(const RealMatrixSpec& spec, const Vector& w, const ProbeConfig& config) {
  const auto d = decompose(spec, config.rank_tol);
  WitnessCheck check;
  const Vector projected = d.rowspace_basis * (d.rowspace_basis.transpose() * w);
  check.distance_to_rowspace = (w - projected).norm();
  const Vector aw = spec.a * w;
  check.aw_norm = aw.norm();
  check.cubic_residual = (spec.a * aw.array().cube().matrix()).norm();
  check.passed = check.distance_to_rowspace <= config.tol_zero * w.norm() &&
                 check.cubic_residual <= config.tol_zero * std::max(1.0, std::pow(check.aw_norm, 3)) &&
                 check.aw_norm >= config.tol_nonzero;
  return check;
}

WitnessSearchResult witness_search(const RealMatrixSpec& spec, const ProbeConfig& config) {
  config.validate();
  const auto d = decompose(spec, config.rank_tol);
  if (d.rowspace_basis.cols() == 0) throw RowspaceEmpty();
  const Matrix& basis = d.rowspace_basis;
  const Matrix a_basis = spec.a * basis;

  detail::SphereObjective objective = [&](const Vector& c, Vector& grad) {
    const Vector v = a_basis * c;
    const Vector r = spec.a * v.array().cube().matrix();
    const Vector inner = (3.0 * v.array().square() * (spec.a.transpose() * r).array()).matrix();
    grad = 2.0 * (a_basis.transpose() * inner);
    return r.squaredNorm();
  };
  // Stream id distinct from every radius index used by scans.
  const auto best = detail::multistart(objective, basis.cols(), config, 0xffffffffULL, std::nullopt);

  WitnessSearchResult result;
  result.best = basis * best.point;
  result.best_residual = std::sqrt(best.value);
  result.check = witness_check(spec, result.best, config);
  if (result.check.passed) result.witness = result.best;
  return result;
}

ProbeReport nonproper_scan(const RealMatrixSpec& spec, const ProbeConfig& config) {
  config.validate();
  const auto d = decompose(spec, config.rank_tol);
  ProbeReport report;
  report.form = spec.form;

  std::optional<Matrix> subspace;
  if (spec.form == MapForm::hat) {
    if (d.colspace_gram_basis.cols() > 0) {
      subspace = d.colspace_gram_basis;
      report.notes.push_back("hat form scanned on Im(A A^T)");
    } else {
      report.notes.push_back("Im(A A^T) is trivial; hat form scanned on the whole space");
    }
  }

  const auto radii = config.radii();
  std::optional<Vector> warm;
  for (unsigned i = 0; i < radii.size(); ++i) {
    RadiusRecord rec = min_image_on_sphere(spec, radii[i], subspace, config, i, warm);
    warm = rec.best_point / rec.best_point.norm();
    report.trajectory.push_back(std::move(rec));
  }

  report.growth_exponent = fit_growth_exponent(report.trajectory);
  report.ratio_limit_estimate = extrapolate_ratio(report.trajectory);

  constexpr std::size_t window = 3;
  const auto& traj = report.trajectory;
  const std::size_t first = traj.size() > window ? traj.size() - window : 0;
  double alpha_sum = 0.0;
  int alpha_count = 0;
  bool final_bounded = true;
  bool all_converged = true;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    all_converged = all_converged && traj[i].converged;
    if (i < first) continue;
    if (traj[i].alpha) {
      alpha_sum += *traj[i].alpha;
      ++alpha_count;
    }
    final_bounded = final_bounded && traj[i].image_norm <= config.sigma;
  }
  if (alpha_count > 0) report.alpha_limit = alpha_sum / alpha_count;
  report.v_limit = limit_direction(traj, window, &RadiusRecord::v);
  report.w_limit = limit_direction(traj, window, &RadiusRecord::w);

  // Norms that at least double across the window are not evidence of a
  // bounded image even while they sit below sigma.
  const bool window_grows = traj.size() - first >= 2 && traj.back().image_norm > config.tol_zero &&
                            traj.back().image_norm > 2.0 * traj[first].image_norm;

  const bool a_is_zero = d.rowspace_basis.cols() == 0;
  if (a_is_zero) {
    report.verdict = Verdict::image_grows;
    report.notes.push_back("A = 0: the map is the identity and every image norm equals its radius");
  } else if (final_bounded && !window_grows) {
    report.verdict = Verdict::bounded_image_candidate;
  } else if (traj.back().image_norm > config.sigma && report.growth_exponent && *report.growth_exponent > 0.0) {
    report.verdict = Verdict::image_grows;
  } else {
    report.verdict = Verdict::inconclusive;
  }
  if (!all_converged) report.notes.push_back("some radii stopped at the iteration limit before converging");

  if (report.ratio_limit_estimate && *report.ratio_limit_estimate <= -1.0 + config.ratio_tol) {
    report.notes.push_back("cosine ratio within ratio_tol of -1");
  }

  if (report.verdict == Verdict::bounded_image_candidate) {
    report.notes.push_back(
        "bounded-image-candidate is numerical evidence from finitely many radii, never a proof of non-properness");
    const Vector u_hat = traj.back().best_point.normalized();
    const Vector c = spec.a * u_hat.array().cube().matrix();
    if (c.squaredNorm() > 0.0) {
      GammaFit fit;
      const double raw = -u_hat.dot(c) / c.squaredNorm();
      fit.clamped = !(raw > 0.0);
      fit.gamma = fit.clamped ? 0.0 : raw;
      fit.residual = (u_hat + fit.gamma * c).norm();
      report.gamma_fit = fit;
    }
    const Vector row_part = d.rowspace_basis * (d.rowspace_basis.transpose() * u_hat);
    if (row_part.norm() > 1e-12) {
      const Vector w = row_part.normalized();
      report.witness = w;
      report.witness_check = witness_check(spec, w, config);
      if (report.witness_check->passed) {
        report.notes.push_back("witness: necessary condition met (not a proof of non-properness)");
      }
    }
  }
  return report;
}

}  // namespace jc::probe
