#include "darboux/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace darboux {

namespace {

// Maximal runs of equal neighbouring factors.
std::vector<std::vector<std::size_t>> collapse(const Factorization<Rational>& f) {
  std::vector<std::vector<std::size_t>> runs;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (!runs.empty() && f.factors[runs.back().back()] == f.factors[i]) {
      runs.back().push_back(i);
    } else {
      runs.push_back({i});
    }
  }
  return runs;
}

std::vector<Joint> chain_joints(const Factorization<Rational>& f, int chain) {
  const auto poses = chain_poses<Rational>(f, Rational(0));
  std::vector<Joint> joints;
  for (const auto& run : collapse(f)) {
    const std::size_t k = run.front();
    Joint j;
    j.name = k < f.names.size() ? f.names[k] : "J" + std::to_string(k + 1);
    j.chain = chain;
    j.factor_indices = run;
    j.home = transform_axis(poses[k], axis_of(f.factors[k].root()));
    joints.push_back(std::move(j));
  }
  return joints;
}

void require_rotational(const Factorization<Rational>& f) {
  for (const auto& factor : f.factors) {
    if (factor.degree() != 1 || !factor.is_monic() || classify(factor.root()) != DisplacementKind::Rotation) {
      throw Error(ErrorCode::NotRotational, "every factor must be t - h with h a rotation quaternion");
    }
  }
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  return a < 0.0 ? a + two_pi : a;
}

double joint_angle_homogeneous(const MotionPoly<Rational>& factor, double s, double c) {
  const auto h = factor.root().cast<double>();
  const Vec3<double> v = vector_part(h.primal);
  const double vn = std::sqrt(dot(v, v));
  if (vn == 0.0) throw Error(ErrorCode::NotARotation, "factor root has no rotation axis");
  if (c < 0.0) {
    s = -s;
    c = -c;
  }
  return 2.0 * std::atan2(vn * c, s - h.primal.w * c);
}

DualQuaternion<double> unit_normalised(const DualQuaternion<double>& h) {
  const double n = std::sqrt(h.primal.norm2());
  return h * (1.0 / n);
}

std::vector<AxisLine<double>> axes_from_poses(const Linkage& l, const std::vector<DualQuaternion<double>>& pa,
                                              const std::vector<DualQuaternion<double>>& pb) {
  std::vector<AxisLine<double>> out;
  for (const auto& j : l.joints) {
    const auto& f = j.chain == 0 ? l.chain_a : l.chain_b;
    const auto& poses = j.chain == 0 ? pa : pb;
    const std::size_t k = j.factor_indices.front();
    const auto local = axis_of(f.factors[k].root()).cast<double>();
    out.push_back(transform_axis(unit_normalised(poses[k]), local));
  }
  return out;
}

std::vector<double> angles_homogeneous(const Linkage& l, double s, double c) {
  std::vector<double> out;
  for (const auto& j : l.joints) {
    const auto& f = j.chain == 0 ? l.chain_a : l.chain_b;
    double sum = 0.0;
    for (auto k : j.factor_indices) sum += joint_angle_homogeneous(f.factors[k], s, c);
    out.push_back(wrap_angle(sum));
  }
  return out;
}

ConfigSample make_sample(const Linkage& l, double t, std::vector<DualQuaternion<double>> pa,
                         std::vector<DualQuaternion<double>> pb, std::vector<double> angles) {
  ConfigSample cs;
  cs.t = t;
  cs.axes_now = axes_from_poses(l, pa, pb);
  cs.coupler = unit_normalised(pa.back());
  if (cs.coupler.primal.w < 0.0) cs.coupler = -cs.coupler;
  cs.closure_residual = projective_distance(pa.back(), pb.back());
  cs.poses_a = std::move(pa);
  cs.poses_b = std::move(pb);
  cs.joint_angles = std::move(angles);
  return cs;
}

}  // namespace

Linkage build_linkage(const Factorization<Rational>& fa, const Factorization<Rational>& fb) {
  require_rotational(fa);
  require_rotational(fb);
  const MotionPoly<Rational> lhs = fa.product() * fb.cofactor;
  const MotionPoly<Rational> rhs = fb.product() * fa.cofactor;
  if (!(lhs == rhs)) {
    throw Error(ErrorCode::ClosureFailure, "chains do not parameterize the same motion polynomial");
  }
  Linkage l;
  l.chain_a = fa;
  l.chain_b = fb;
  l.closure_poly = lhs;
  l.joints = chain_joints(fa, 0);
  auto jb = chain_joints(fb, 1);
  l.joints.insert(l.joints.end(), jb.rbegin(), jb.rend());
  l.degenerate = fa.factors == fb.factors;
  return l;
}

std::vector<DualQuaternion<double>> chain_poses_at_angle(const Factorization<Rational>& f, double phi) {
  const double s = std::sin(phi / 2.0);
  const double c = std::cos(phi / 2.0);
  std::vector<DualQuaternion<double>> poses{DualQuaternion<double>::real(1.0)};
  for (const auto& factor : f.factors) poses.push_back(poses.back() * factor.cast<double>().homogeneous(s, c));
  return poses;
}

bool projectively_equal(const DualQuaternion<Rational>& a, const DualQuaternion<Rational>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      if (ca[i] * cb[j] != ca[j] * cb[i]) return false;
  return true;
}

double projective_distance(const DualQuaternion<double>& a, const DualQuaternion<double>& b) {
  const auto ca = unit_normalised(a).coefficients();
  auto cb = unit_normalised(b).coefficients();
  double d = 0.0;
  for (std::size_t i = 0; i < 8; ++i) d += ca[i] * cb[i];
  const double sign = d < 0.0 ? -1.0 : 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 8; ++i) worst = std::max(worst, std::abs(ca[i] - sign * cb[i]));
  return worst;
}

double joint_angle(const MotionPoly<Rational>& factor, double t) {
  if (classify(factor.root()) != DisplacementKind::Rotation) {
    throw Error(ErrorCode::NotARotation, "joint_angle needs a rotation factor");
  }
  return joint_angle_homogeneous(factor, t, 1.0);
}

ConfigSample sample_configuration(const Linkage& l, double t) {
  return make_sample(l, t, chain_poses<double>(l.chain_a, t), chain_poses<double>(l.chain_b, t),
                     angles_homogeneous(l, t, 1.0));
}

ConfigSample sample_configuration_at_angle(const Linkage& l, double phi) {
  const double s = std::sin(phi / 2.0);
  const double c = std::cos(phi / 2.0);
  return make_sample(l, std::tan(phi / 2.0), chain_poses_at_angle(l.chain_a, phi),
                     chain_poses_at_angle(l.chain_b, phi), angles_homogeneous(l, s, c));
}

std::vector<AxisLine<double>> joint_axes_at(const Linkage& l, double t) {
  return axes_from_poses(l, chain_poses<double>(l.chain_a, t), chain_poses<double>(l.chain_b, t));
}

MobilityReport screw_rank(std::span<const AxisLine<double>> screws, double tol) {
  MobilityReport rep;
  const auto n = static_cast<Eigen::Index>(screws.size());
  rep.dof = static_cast<int>(n);
  if (n == 0) return rep;
  Eigen::MatrixXd m(6, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& ax = screws[static_cast<std::size_t>(i)];
    const double len = std::sqrt(dot(ax.direction, ax.direction));
    m.col(i) << ax.direction.x / len, ax.direction.y / len, ax.direction.z / len, ax.moment.x / len,
        ax.moment.y / len, ax.moment.z / len;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) rep.singular_values.push_back(sv(i));
  const double cutoff = tol * (sv.size() > 0 ? sv(0) : 0.0);
  for (double s : rep.singular_values)
    if (s > cutoff) ++rep.numeric_rank;
  rep.dof = static_cast<int>(n) - rep.numeric_rank;
  return rep;
}

MobilityReport mobility_at(const Linkage& l, double t, double tol) {
  const auto axes = joint_axes_at(l, t);
  MobilityReport rep = screw_rank(axes, tol);
  rep.t = t;
  return rep;
}

std::vector<std::vector<int>> parallel_groups(const Linkage& l) {
  std::vector<AxisLine<Rational>> axes;
  for (const auto& j : l.joints) axes.push_back(j.home);
  return parallel_groups<Rational>(axes);
}

SubstructureReport substructure_report(std::span<const std::vector<int>> groups, std::size_t n) {
  SubstructureReport rep;
  if (n == 0) return rep;
  std::vector<int> gid(n, -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (int j : groups[g]) gid[static_cast<std::size_t>(j - 1)] = static_cast<int>(g);
  auto same = [&](std::size_t a, std::size_t b) { return gid[a % n] == gid[b % n]; };
  auto label = [&](std::size_t i) { return static_cast<int>(i % n) + 1; };

  // Cyclic runs of equal group id, starting at a group boundary.
  std::size_t start = 0;
  while (start < n && same(start + n - 1, start)) ++start;
  if (start == n) {
    if (n >= 4) {
      rep.four_bar.emplace();
      for (std::size_t i = 0; i < n; ++i) rep.four_bar->push_back(label(i));
    }
  } else {
    for (std::size_t i = 0; i < n;) {
      std::size_t len = 1;
      while (len < n && same(start + i + len - 1, start + i + len)) ++len;
      if (len >= 4 && !rep.four_bar) {
        rep.four_bar.emplace();
        for (std::size_t k = 0; k < len; ++k) rep.four_bar->push_back(label(start + i + k));
      }
      i += len;
    }
  }

  if (n != 6 && n != 7) return rep;
  std::vector<std::size_t> triples;
  for (std::size_t s = 0; s < n; ++s)
    if (same(s, s + 1) && same(s + 1, s + 2)) triples.push_back(s);
  for (std::size_t a = 0; a < triples.size(); ++a) {
    for (std::size_t b = a + 1; b < triples.size(); ++b) {
      const std::size_t s1 = triples[a], s2 = triples[b];
      if (same(s1, s2)) continue;
      std::vector<bool> used(n, false);
      bool overlap = false;
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t s : {s1, s2}) {
          if (used[(s + k) % n]) overlap = true;
          used[(s + k) % n] = true;
        }
      }
      if (overlap) continue;
      SarrusPair pair;
      for (std::size_t k = 0; k < 3; ++k) {
        pair.first.push_back(label(s1 + k));
        pair.second.push_back(label(s2 + k));
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) pair.locked_joint = static_cast<int>(i) + 1;
      rep.sarrus.push_back(std::move(pair));
    }
  }
  return rep;
}

SubstructureReport substructure_report(const Linkage& l) {
  const auto groups = parallel_groups(l);
  return substructure_report(groups, l.joint_count());
}

TrajectoryReport trace_point(const Linkage& l, const Vec3<double>& point, std::span<const double> t_samples,
                             const TrajectoryTolerances& tol) {
  return trace_point(l.chain_a.product().cast<double>(), point, t_samples, tol);
}

}  // namespace darboux
