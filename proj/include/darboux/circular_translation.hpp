#pragma once

#include <span>
#include <vector>

#include "darboux/darboux.hpp"
#include "darboux/trajectory.hpp"

namespace darboux {

struct CircularTranslationReport {
  MotionPoly<Rational> right_factor;  // Q3 with the (possibly offset) w
  MotionPoly<Rational> quotient;      // Q with C = Q Q3
  bool primal_is_t2_plus_1 = false;
  bool exact_circular = false;        // is_circular_translation(quotient)
  std::vector<TrajectoryReport> orbits;
  double max_radius_spread = 0.0;     // max - min over all fitted semi-axes
  double max_axis_ratio_deviation = 0.0;  // max over orbits of |1 - minor/major|
  bool all_circles = false;
};

/// Splits off the FI right factor with w shifted by w_offset and samples the
/// orbits of the given points under the quotient motion.
CircularTranslationReport circular_translation_check(const DarbouxParams<Rational>& p, const Rational& w_offset,
                                                     std::span<const Vec3<double>> points,
                                                     std::span<const double> t_samples);

}  // namespace darboux
