#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jc::probe {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// standard: X + (AX)^{*3}; hat: X + A X^{*3}.
enum class MapForm { standard, hat };

std::string to_string(MapForm form);

struct RealMatrixSpec {
  Matrix a;
  MapForm form = MapForm::standard;

  /// Throws std::invalid_argument for non-square or non-finite input.
  static RealMatrixSpec make(Matrix a, MapForm form = MapForm::standard);
  Eigen::Index dimension() const { return a.rows(); }
};

struct SubspaceDecomposition {
  Matrix kernel_basis;         // orthonormal columns spanning ker A
  Matrix rowspace_basis;       // orthonormal columns spanning Im(A^T)
  Matrix colspace_gram_basis;  // orthonormal columns spanning Im(A A^T)
  Vector singular_values;
  std::optional<double> delta1;  // min ||AX|| over unit X in Im(A^T)
};

struct ProbeConfig {
  double r0 = 10.0;
  double factor = 10.0;
  unsigned count = 6;
  unsigned restarts = 8;
  unsigned max_iterations = 2000;
  double initial_step = 0.5;  // geodesic angle of the first trial step
  double step_shrink = 0.5;
  double min_step = 1e-15;
  double convergence_tol = 1e-10;  // relative objective change
  double ratio_tol = 1e-6;
  double tol_zero = 1e-7;
  double tol_nonzero = 1e-4;
  double rank_tol = 1e-10;
  double sigma = 10.0;
  std::uint64_t seed = 20240531;
  /// Worker threads for restarts; never affects results.
  unsigned threads = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  std::vector<double> radii() const;
};

struct RadiusRecord {
  double radius = 0.0;
  Vector best_point;
  double image_norm = 0.0;
  std::optional<double> ratio;
  std::optional<double> alpha;  // kernel share of the unit direction
  std::optional<Vector> v;      // unit kernel component
  std::optional<Vector> w;      // unit row-space component
  bool converged = false;
  unsigned iterations = 0;
};

struct WitnessCheck {
  bool passed = false;
  double distance_to_rowspace = 0.0;
  double cubic_residual = 0.0;  // ||A (AW)^{*3}||
  double aw_norm = 0.0;
};

struct WitnessSearchResult {
  std::optional<Vector> witness;
  Vector best;
  double best_residual = 0.0;
  WitnessCheck check;
};

struct GammaFit {
  double gamma = 0.0;
  double residual = 0.0;
  bool clamped = false;  // unconstrained minimizer was not positive
};

enum class Verdict { bounded_image_candidate, image_grows, inconclusive };
std::string to_string(Verdict verdict);

struct ProbeReport {
  MapForm form = MapForm::standard;
  std::vector<RadiusRecord> trajectory;
  Verdict verdict = Verdict::inconclusive;
  std::optional<double> ratio_limit_estimate;
  std::optional<double> growth_exponent;
  std::optional<double> alpha_limit;
  std::optional<Vector> v_limit;
  std::optional<Vector> w_limit;
  std::optional<Vector> witness;
  std::optional<WitnessCheck> witness_check;
  std::optional<GammaFit> gamma_fit;
  std::vector<std::string> notes;
};

/// Raised when the cosine ratio has no value at the given point.
class UndefinedRatio : public std::domain_error {
 public:
  enum class Reason { zero_point, zero_cubic_image };
  UndefinedRatio(Reason reason, const std::string& what) : std::domain_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

class RowspaceEmpty : public std::domain_error {
 public:
  RowspaceEmpty() : std::domain_error("row space of A is empty; no witness can exist") {}
};

SubspaceDecomposition decompose(const RealMatrixSpec& spec, double rank_tol);

/// The cubic part (AU)^{*3} or A U^{*3}.
Vector cubic_part(const RealMatrixSpec& spec, const Vector& u);
Vector image(const RealMatrixSpec& spec, const Vector& u);

/// U^T C(U) / (||U|| ||C(U)||) for the cubic part C.
double cosine_ratio(const RealMatrixSpec& spec, const Vector& u);

/// Multi-start projected gradient minimization of ||F(U)||^2 on ||U|| = R,
/// optionally inside span(subspace). Starts are keyed by (seed,
/// radius_index, restart); warm_start, when given, replaces restart 0.
RadiusRecord min_image_on_sphere(const RealMatrixSpec& spec, double radius, const std::optional<Matrix>& subspace,
                                 const ProbeConfig& config, unsigned radius_index = 0,
                                 const std::optional<Vector>& warm_start = std::nullopt);

ProbeReport nonproper_scan(const RealMatrixSpec& spec, const ProbeConfig& config);

WitnessCheck witness_check(const RealMatrixSpec& spec, const Vector& w, const ProbeConfig& config);
/// Throws RowspaceEmpty when A = 0.
WitnessSearchResult witness_search(const RealMatrixSpec& spec, const ProbeConfig& config);

/// det(I + lambda A (AU)^{Delta 2}) in double precision.
double scaled_family_determinant(const Matrix& a, const Vector& u, double lambda);

// Exposed for tests.
namespace detail {

struct SphereResult {
  Vector point;
  double value = 0.0;
  bool converged = false;
  unsigned iterations = 0;
};

/// value(c, grad) returns the objective at unit c and writes its Euclidean
/// gradient into grad.
using SphereObjective = std::function<double(const Vector&, Vector&)>;

SphereResult minimize_on_sphere(const SphereObjective& objective, Vector start, const ProbeConfig& config);

/// Deterministic start for (seed, stream, restart): a unit vector.
Vector start_direction(std::uint64_t seed, std::uint64_t stream, std::uint64_t restart, Eigen::Index dim);

/// Runs restarts across config.threads workers and keeps the best by
/// (value, lexicographic point).
SphereResult multistart(const SphereObjective& objective, Eigen::Index dim, const ProbeConfig& config,
                        std::uint64_t stream, const std::optional<Vector>& warm_start);

}  // namespace detail

}  // namespace jc::probe
