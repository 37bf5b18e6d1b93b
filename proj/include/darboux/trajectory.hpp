#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "darboux/geometry.hpp"
#include "darboux/motion_poly.hpp"

namespace darboux {

enum class ConicClass { Ellipse, Circle, Degenerate };

std::string_view to_string(ConicClass c);

/// Thresholds for orbit classification.
struct TrajectoryTolerances {
  double plane_rel = 1e-9;   // max plane distance relative to the orbit diameter
  double circle_rel = 1e-6;  // |minor/major - 1| below this is a circle
  double fixed_abs = 1e-12;  // orbit diameter below this is a fixed point
};

struct TrajectoryReport {
  Vec3<double> point;
  std::size_t samples = 0;
  double plane_residual = 0.0;  // max distance of a sample to the fitted plane
  double diameter = 0.0;        // max distance between two samples
  Vec3<double> normal;
  Vec3<double> center;
  ConicClass conic_class = ConicClass::Degenerate;
  std::pair<double, double> semi_axes{0.0, 0.0};  // (major, minor)
};

/// Total least squares plane, then an algebraic conic fit inside that plane.
TrajectoryReport classify_orbit(const Vec3<double>& point, std::span<const Vec3<double>> orbit,
                                const TrajectoryTolerances& tol = {});

/// Path of a moving point under the motion C(t), sampled at t_samples.
std::vector<Vec3<double>> sample_orbit(const MotionPoly<double>& motion, const Vec3<double>& point,
                                       std::span<const double> t_samples);

TrajectoryReport trace_point(const MotionPoly<double>& motion, const Vec3<double>& point,
                             std::span<const double> t_samples, const TrajectoryTolerances& tol = {});

/// n evenly spaced values in [lo, hi] (lo only when n == 1).
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace darboux
