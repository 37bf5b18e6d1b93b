#include "darboux/circular_translation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace darboux {

CircularTranslationReport circular_translation_check(const DarbouxParams<Rational>& p, const Rational& w_offset,
                                                     std::span<const Vec3<double>> points,
                                                     std::span<const double> t_samples) {
  const auto c = darboux_c(p);
  auto q3_root = factor_fi(p).factors[2].root();
  q3_root.dual.y += w_offset;

  CircularTranslationReport rep;
  rep.right_factor = MotionPoly<Rational>::linear(q3_root);
  const auto dm = mp_divmod(c, rep.right_factor);
  if (!dm.remainder.is_zero()) throw Error(ErrorCode::NotADivisor, "Q3 is not a right factor of C");
  rep.quotient = dm.quotient;
  rep.primal_is_t2_plus_1 = rep.quotient.primal_part() == MotionPoly<Rational>(RealPoly<Rational>::t2_plus_1());
  rep.exact_circular = is_circular_translation(rep.quotient);

  const auto motion = rep.quotient.cast<double>();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  rep.all_circles = true;
  for (const auto& pt : points) {
    auto orbit = trace_point(motion, pt, t_samples);
    lo = std::min({lo, orbit.semi_axes.first, orbit.semi_axes.second});
    hi = std::max({hi, orbit.semi_axes.first, orbit.semi_axes.second});
    if (orbit.semi_axes.first > 0.0) {
      rep.max_axis_ratio_deviation =
          std::max(rep.max_axis_ratio_deviation, 1.0 - orbit.semi_axes.second / orbit.semi_axes.first);
    }
    rep.all_circles = rep.all_circles && orbit.conic_class == ConicClass::Circle;
    rep.orbits.push_back(orbit);
  }
  rep.max_radius_spread = points.empty() ? 0.0 : hi - lo;
  return rep;
}

}  // namespace darboux
