#include "jc/probe.hpp"

#include <cmath>

namespace jc::probe {

std::string to_string(MapForm form) { return form == MapForm::standard ? "standard" : "hat"; }

RealMatrixSpec RealMatrixSpec::make(Matrix a, MapForm form) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw std::invalid_argument("probe matrix must be square and non-empty");
  if (!a.allFinite()) throw std::invalid_argument("probe matrix has non-finite entries");
  return RealMatrixSpec{std::move(a), form};
}

SubspaceDecomposition decompose(const RealMatrixSpec& spec, double rank_tol) {
  if (!(rank_tol > 0.0)) throw std::invalid_argument("rank tolerance must be positive");
  const Eigen::Index n = spec.dimension();
  Eigen::JacobiSVD<Matrix> svd(spec.a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  const double threshold = rank_tol * (s.size() > 0 ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > threshold && s(rank) > 0.0) ++rank;

  SubspaceDecomposition d;
  d.singular_values = s;
  d.rowspace_basis = svd.matrixV().leftCols(rank);
  d.kernel_basis = svd.matrixV().rightCols(n - rank);
  d.colspace_gram_basis = svd.matrixU().leftCols(rank);
  if (rank > 0) d.delta1 = s(rank - 1);
  return d;
}

Vector cubic_part(const RealMatrixSpec& spec, const Vector& u) {
  if (spec.form == MapForm::standard) return (spec.a * u).array().cube().matrix();
  return spec.a * u.array().cube().matrix();
}

Vector image(const RealMatrixSpec& spec, const Vector& u) { return u + cubic_part(spec, u); }

double cosine_ratio(const RealMatrixSpec& spec, const Vector& u) {
  const double un = u.norm();
  if (un == 0.0) throw UndefinedRatio(UndefinedRatio::Reason::zero_point, "cosine ratio undefined at U = 0");
  const Vector c = cubic_part(spec, u);
  const double cn = c.norm();
  if (cn == 0.0) {
    throw UndefinedRatio(UndefinedRatio::Reason::zero_cubic_image,
                         spec.form == MapForm::standard ? "cosine ratio undefined: (AU)^{*3} = 0"
                                                        : "cosine ratio undefined: A U^{*3} = 0");
  }
  return std::clamp(u.dot(c) / (un * cn), -1.0, 1.0);
}

double scaled_family_determinant(const Matrix& a, const Vector& u, double lambda) {
  const Vector au = a * u;
  const Matrix m = Matrix::Identity(a.rows(), a.cols()) + lambda * a * au.array().square().matrix().asDiagonal();
  return m.determinant();
}

}  // namespace jc::probe
