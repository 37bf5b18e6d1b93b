#include "darboux/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace darboux {

std::string_view to_string(ConicClass c) {
  switch (c) {
    case ConicClass::Ellipse: return "Ellipse";
    case ConicClass::Circle: return "Circle";
    case ConicClass::Degenerate: return "Degenerate";
  }
  return "Degenerate";
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (n == 0) return out;
  if (n == 1) return {lo};
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

std::vector<Vec3<double>> sample_orbit(const MotionPoly<double>& motion, const Vec3<double>& point,
                                       std::span<const double> t_samples) {
  std::vector<Vec3<double>> orbit;
  orbit.reserve(t_samples.size());
  for (double t : t_samples) orbit.push_back(act_point(motion(t), point));
  return orbit;
}

namespace {

Vec3<double> to_vec(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

}  // namespace

TrajectoryReport classify_orbit(const Vec3<double>& point, std::span<const Vec3<double>> orbit,
                                const TrajectoryTolerances& tol) {
  if (orbit.size() < 6) throw Error(ErrorCode::InsufficientSamples, "conic fitting needs at least 6 samples");
  TrajectoryReport rep;
  rep.point = point;
  rep.samples = orbit.size();

  const auto n = static_cast<Eigen::Index>(orbit.size());
  Eigen::MatrixXd pts(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) pts.row(i) << orbit[i].x, orbit[i].y, orbit[i].z;
  const Eigen::RowVector3d centroid = pts.colwise().mean();
  const Eigen::MatrixXd centered = pts.rowwise() - centroid;

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      rep.diameter = std::max(rep.diameter, (pts.row(i) - pts.row(j)).norm());
  rep.center = to_vec(centroid.transpose());
  if (rep.diameter < tol.fixed_abs) return rep;

  Eigen::JacobiSVD<Eigen::MatrixXd> plane_svd(centered, Eigen::ComputeThinV);
  const Eigen::Vector3d u_axis = plane_svd.matrixV().col(0);
  const Eigen::Vector3d v_axis = plane_svd.matrixV().col(1);
  const Eigen::Vector3d normal = plane_svd.matrixV().col(2);
  rep.normal = to_vec(normal);
  rep.plane_residual = (centered * normal).cwiseAbs().maxCoeff();
  if (rep.plane_residual > tol.plane_rel * rep.diameter) return rep;

  // In-plane coordinates scaled to O(1) for conditioning.
  const double scale = rep.diameter;
  Eigen::MatrixXd design(n, 6);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = centered.row(i).dot(u_axis) / scale;
    const double y = centered.row(i).dot(v_axis) / scale;
    design.row(i) << x * x, x * y, y * y, x, y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> conic_svd(design, Eigen::ComputeFullV);
  const auto& sv = conic_svd.singularValues();
  // A second (near) null direction means the samples do not pin down one conic,
  // e.g. collinear points.
  if (sv.size() < 6 || sv(4) < 1e-9 * sv(0)) return rep;
  const Eigen::VectorXd q = conic_svd.matrixV().col(5);
  const double A = q(0), B = q(1), C = q(2), D = q(3), E = q(4), F = q(5);
  if (B * B - 4.0 * A * C >= 0.0) return rep;

  Eigen::Matrix2d m2;
  m2 << 2.0 * A, B, B, 2.0 * C;
  const Eigen::Vector2d c2 = m2.partialPivLu().solve(Eigen::Vector2d(-D, -E));
  const double f0 = A * c2.x() * c2.x() + B * c2.x() * c2.y() + C * c2.y() * c2.y() + D * c2.x() + E * c2.y() + F;
  Eigen::Matrix2d quad;
  quad << A, B / 2.0, B / 2.0, C;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(quad);
  const double s0 = -f0 / eig.eigenvalues()(0);
  const double s1 = -f0 / eig.eigenvalues()(1);
  if (s0 <= 0.0 || s1 <= 0.0) return rep;

  const double major = std::sqrt(std::max(s0, s1)) * scale;
  const double minor = std::sqrt(std::min(s0, s1)) * scale;
  rep.semi_axes = {major, minor};
  rep.center = to_vec((centroid.transpose() + scale * (c2.x() * u_axis + c2.y() * v_axis)).eval());
  rep.conic_class = (1.0 - minor / major) < tol.circle_rel ? ConicClass::Circle : ConicClass::Ellipse;
  return rep;
}

TrajectoryReport trace_point(const MotionPoly<double>& motion, const Vec3<double>& point,
                             std::span<const double> t_samples, const TrajectoryTolerances& tol) {
  const auto orbit = sample_orbit(motion, point, t_samples);
  return classify_orbit(point, orbit, tol);
}

}  // namespace darboux
