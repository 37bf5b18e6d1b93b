#pragma once

#include <string>

#include <json.hpp>

#include "darboux/circular_translation.hpp"
#include "darboux/linkage.hpp"

namespace darboux::io {

using nlohmann::json;

// Exact scalars are strings ("3", "-3/2"); floating point scalars are numbers.
json to_json(const Rational& x);
json to_json(double x);

template <Scalar S>
json to_json(const DualQuaternion<S>& h) {
  json out = json::array();
  for (const auto& c : h.coefficients()) out.push_back(to_json(c));
  return out;
}

template <Scalar S>
json to_json(const Vec3<S>& v) {
  return json::array({to_json(v.x), to_json(v.y), to_json(v.z)});
}

template <Scalar S>
json to_json(const AxisLine<S>& ax) {
  return {{"direction", to_json(ax.direction)}, {"moment", to_json(ax.moment)}};
}

template <Scalar S>
json to_json(const MotionPoly<S>& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

template <Scalar S>
json to_json(const RealPoly<S>& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const DarbouxParams<Rational>& p);
json to_json(const Factorization<Rational>& f);
json to_json(const Linkage& l);
json to_json(const TrajectoryReport& r);
json to_json(const MobilityReport& r);
json to_json(const SubstructureReport& r);
json to_json(const CircularTranslationReport& r);

Rational rational_from_json(const json& j);
DualQuaternion<Rational> dual_quaternion_from_json(const json& j);
AxisLine<Rational> axis_from_json(const json& j);
MotionPoly<Rational> motion_poly_from_json(const json& j);
RealPoly<Rational> real_poly_from_json(const json& j);
DarbouxParams<Rational> params_from_json(const json& j);
Factorization<Rational> factorization_from_json(const json& j);

/// SHA-256 (hex) of the compact JSON of the closure polynomial.
std::string closure_certificate(const MotionPoly<Rational>& closure_poly);

/// CSV header / row: t, one angle per joint, the coupler pose (8 numbers), closure_residual.
std::string config_csv_header(std::size_t joint_count);
std::string config_csv_row(const ConfigSample& s);

}  // namespace darboux::io
