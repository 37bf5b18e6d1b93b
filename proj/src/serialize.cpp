#include "darboux/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <openssl/evp.h>

namespace darboux::io {

json to_json(const Rational& x) { return to_string(x); }
json to_json(double x) { return x; }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) return Rational(j.get<double>());
  throw Error(ErrorCode::InvalidInput, "expected a rational, got " + j.dump());
}

DualQuaternion<Rational> dual_quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw Error(ErrorCode::InvalidInput, "dual quaternion needs 8 coefficients");
  std::array<Rational, 8> h;
  for (std::size_t i = 0; i < 8; ++i) h[i] = rational_from_json(j[i]);
  return DualQuaternion<Rational>::from_coefficients(h);
}

namespace {

Vec3<Rational> vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::InvalidInput, "vector needs 3 coordinates");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

json groups_to_json(const std::vector<std::vector<int>>& groups) {
  json out = json::array();
  for (const auto& g : groups) out.push_back(g);
  return out;
}

}  // namespace

AxisLine<Rational> axis_from_json(const json& j) {
  return {vec_from_json(j.at("direction")), vec_from_json(j.at("moment"))};
}

MotionPoly<Rational> motion_poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "polynomial must be an array");
  std::vector<DualQuaternion<Rational>> coeffs;
  for (const auto& c : j) coeffs.push_back(dual_quaternion_from_json(c));
  return MotionPoly<Rational>(std::move(coeffs));
}

RealPoly<Rational> real_poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "real polynomial must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return RealPoly<Rational>(std::move(coeffs));
}

json to_json(const DarbouxParams<Rational>& p) {
  json out{{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c", to_json(p.c)}};
  if (p.x) out["x"] = to_json(*p.x);
  if (p.y) out["y"] = to_json(*p.y);
  return out;
}

DarbouxParams<Rational> params_from_json(const json& j) {
  DarbouxParams<Rational> p{rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                            rational_from_json(j.at("c")), std::nullopt, std::nullopt};
  if (j.contains("x")) p.x = rational_from_json(j["x"]);
  if (j.contains("y")) p.y = rational_from_json(j["y"]);
  return p;
}

json to_json(const Factorization<Rational>& f) {
  json factors = json::array();
  for (const auto& q : f.factors) factors.push_back(to_json(q));
  json pairs = json::array();
  for (const auto& [i, k] : f.identical_adjacent()) pairs.push_back({i, k});
  return {{"label", std::string(to_string(f.label))},
          {"cofactor", to_json(f.cofactor)},
          {"factors", factors},
          {"names", f.names},
          {"params", to_json(f.params)},
          {"identical_adjacent", pairs}};
}

Factorization<Rational> factorization_from_json(const json& j) {
  try {
    Factorization<Rational> f;
    f.label = parse_label(j.at("label").get<std::string>());
    f.cofactor = real_poly_from_json(j.at("cofactor"));
    for (const auto& q : j.at("factors")) f.factors.push_back(motion_poly_from_json(q));
    if (j.contains("names")) f.names = j["names"].get<std::vector<std::string>>();
    f.params = params_from_json(j.at("params"));
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed factorization: ") + e.what());
  }
}

std::string closure_certificate(const MotionPoly<Rational>& closure_poly) {
  const std::string text = to_json(closure_poly).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidInput, "SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

json to_json(const SubstructureReport& r) {
  json sarrus = json::array();
  for (const auto& s : r.sarrus) {
    json item{{"first", s.first}, {"second", s.second}};
    item["locked_joint"] = s.locked_joint ? json(*s.locked_joint) : json(nullptr);
    sarrus.push_back(item);
  }
  json out{{"four_bar", r.four_bar ? json(*r.four_bar) : json(nullptr)}, {"sarrus", sarrus}};
  return out;
}

json to_json(const Linkage& l) {
  json joints = json::array();
  for (std::size_t i = 0; i < l.joints.size(); ++i) {
    const auto& j = l.joints[i];
    joints.push_back({{"index", i + 1},
                      {"name", j.name},
                      {"chain", j.chain == 0 ? "a" : "b"},
                      {"factor_indices", j.factor_indices},
                      {"axis", to_json(j.home)}});
  }
  return {{"joint_count", l.joint_count()},
          {"joints", joints},
          {"chain_a", to_json(l.chain_a)},
          {"chain_b", to_json(l.chain_b)},
          {"degenerate", l.degenerate},
          {"closure_certificate",
           {{"polynomial", to_json(l.closure_poly)}, {"sha256", closure_certificate(l.closure_poly)}}},
          {"parallel_groups", groups_to_json(parallel_groups(l))},
          {"substructure", to_json(substructure_report(l))}};
}

json to_json(const TrajectoryReport& r) {
  return {{"point", to_json(r.point)},
          {"samples", r.samples},
          {"plane_residual", r.plane_residual},
          {"diameter", r.diameter},
          {"normal", to_json(r.normal)},
          {"center", to_json(r.center)},
          {"conic_class", std::string(to_string(r.conic_class))},
          {"semi_axes", {r.semi_axes.first, r.semi_axes.second}}};
}

json to_json(const MobilityReport& r) {
  return {{"t", r.t}, {"singular_values", r.singular_values}, {"numeric_rank", r.numeric_rank}, {"dof", r.dof}};
}

json to_json(const CircularTranslationReport& r) {
  json orbits = json::array();
  for (const auto& o : r.orbits) orbits.push_back(to_json(o));
  return {{"right_factor", to_json(r.right_factor)},
          {"quotient", to_json(r.quotient)},
          {"primal_is_t2_plus_1", r.primal_is_t2_plus_1},
          {"exact_circular", r.exact_circular},
          {"all_circles", r.all_circles},
          {"max_radius_spread", r.max_radius_spread},
          {"max_axis_ratio_deviation", r.max_axis_ratio_deviation},
          {"orbits", orbits}};
}

std::string config_csv_header(std::size_t joint_count) {
  std::ostringstream os;
  os << "t";
  for (std::size_t i = 1; i <= joint_count; ++i) os << ",theta" << i;
  for (int i = 0; i < 8; ++i) os << ",h" << i;
  os << ",closure_residual";
  return os.str();
}

std::string config_csv_row(const ConfigSample& s) {
  std::ostringstream os;
  os.precision(17);
  os << s.t;
  for (double a : s.joint_angles) os << ',' << a;
  for (double h : s.coupler.coefficients()) os << ',' << h;
  os << ',' << s.closure_residual;
  return os.str();
}

}  // namespace darboux::io
