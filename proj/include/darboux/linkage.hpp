#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "darboux/darboux.hpp"
#include "darboux/trajectory.hpp"

namespace darboux {

/// A revolute joint of the loop. Repeated adjacent factors share one joint.
struct Joint {
  std::string name;
  int chain = 0;                            // 0: chain_a, 1: chain_b
  std::vector<std::size_t> factor_indices;  // into the chain's factor list
  AxisLine<Rational> home;                  // fixed-frame axis at t = 0
};

/// Closed loop made of two open chains generating the same motion.
/// Joint order: chain_a left to right, then chain_b right to left.
struct Linkage {
  std::vector<Joint> joints;
  Factorization<Rational> chain_a;
  Factorization<Rational> chain_b;
  MotionPoly<Rational> closure_poly;  // product(a) * cofactor_b == product(b) * cofactor_a
  bool degenerate = false;            // both chains are the same chain

  std::size_t joint_count() const { return joints.size(); }
};

Linkage build_linkage(const Factorization<Rational>& fa, const Factorization<Rational>& fb);

/// Poses of links 0..n of an open chain: link j carries the product of the first j factors.
template <Scalar S>
std::vector<DualQuaternion<S>> chain_poses(const Factorization<Rational>& f, const S& t) {
  std::vector<DualQuaternion<S>> poses{DualQuaternion<S>::real(S(1))};
  for (const auto& factor : f.factors) poses.push_back(poses.back() * factor.template cast<S>()(t));
  return poses;
}

/// Same as chain_poses at t = tan(phi/2), but finite for phi = +-pi.
std::vector<DualQuaternion<double>> chain_poses_at_angle(const Factorization<Rational>& f, double phi);

/// Exact projective equality of two dual quaternions (proportional coefficient vectors).
bool projectively_equal(const DualQuaternion<Rational>& a, const DualQuaternion<Rational>& b);

/// Max coefficient difference after normalising both to unit primal part with matching sign.
double projective_distance(const DualQuaternion<double>& a, const DualQuaternion<double>& b);

/// Rotation angle of the factor t - h at parameter t: cot(theta/2) = (t - h0) / |(h1, h2, h3)|,
/// theta in (0, 2pi), decreasing in t, tending to 0 (mod 2pi) for t -> +-inf.
double joint_angle(const MotionPoly<Rational>& factor, double t);

struct ConfigSample {
  double t = 0.0;
  std::vector<DualQuaternion<double>> poses_a;
  std::vector<DualQuaternion<double>> poses_b;
  std::vector<double> joint_angles;  // per joint, summed over collapsed factors, in [0, 2pi)
  std::vector<AxisLine<double>> axes_now;
  DualQuaternion<double> coupler;    // unit-normalised end pose of chain_a
  double closure_residual = 0.0;
};

ConfigSample sample_configuration(const Linkage& l, double t);
ConfigSample sample_configuration_at_angle(const Linkage& l, double phi);

/// Fixed-frame joint axes at parameter t.
std::vector<AxisLine<double>> joint_axes_at(const Linkage& l, double t);

struct MobilityReport {
  double t = 0.0;
  std::vector<double> singular_values;
  int numeric_rank = 0;
  int dof = 0;
};

/// Rank of the 6 x n matrix of unit joint screws [direction; moment].
MobilityReport screw_rank(std::span<const AxisLine<double>> screws, double tol = 1e-8);

MobilityReport mobility_at(const Linkage& l, double t, double tol = 1e-8);

/// Partition of joints (1-based) by parallel directions; groups sorted by first member.
template <Scalar S>
std::vector<std::vector<int>> parallel_groups(std::span<const AxisLine<S>> axes, double rel_tol = 1e-9) {
  std::vector<int> group(axes.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (group[i] >= 0) continue;
    group[i] = static_cast<int>(out.size());
    out.push_back({static_cast<int>(i) + 1});
    for (std::size_t j = i + 1; j < axes.size(); ++j) {
      if (group[j] < 0 && parallel(axes[i].direction, axes[j].direction, rel_tol)) {
        group[j] = group[i];
        out.back().push_back(static_cast<int>(j) + 1);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> parallel_groups(const Linkage& l);

struct SarrusPair {
  std::vector<int> first;   // three consecutive parallel joints
  std::vector<int> second;  // three more, parallel among themselves but not to first
  std::optional<int> locked_joint;
};

struct SubstructureReport {
  std::optional<std::vector<int>> four_bar;  // a cyclic run of >= 4 parallel joints
  std::vector<SarrusPair> sarrus;
  bool empty() const { return !four_bar && sarrus.empty(); }
};

SubstructureReport substructure_report(const Linkage& l);
SubstructureReport substructure_report(std::span<const std::vector<int>> groups, std::size_t joint_count);

/// Orbit of a point attached to the coupler (end link of chain_a).
TrajectoryReport trace_point(const Linkage& l, const Vec3<double>& point, std::span<const double> t_samples,
                             const TrajectoryTolerances& tol = {});

}  // namespace darboux
