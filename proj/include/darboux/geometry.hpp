#pragma once

#include <array>
#include <string_view>

#include "darboux/quaternion.hpp"

namespace darboux {

template <Scalar S>
struct Vec3 {
  S x{0}, y{0}, z{0};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {S(a.x + b.x), S(a.y + b.y), S(a.z + b.z)}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {S(a.x - b.x), S(a.y - b.y), S(a.z - b.z)}; }
  friend Vec3 operator-(const Vec3& a) { return {S(-a.x), S(-a.y), S(-a.z)}; }
  friend Vec3 operator*(const Vec3& a, const S& s) { return {S(a.x * s), S(a.y * s), S(a.z * s)}; }
  friend Vec3 operator*(const S& s, const Vec3& a) { return a * s; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

  bool is_zero() const { return darboux::is_zero(x) && darboux::is_zero(y) && darboux::is_zero(z); }

  template <Scalar T>
  Vec3<T> cast() const {
    return {scalar_cast<T>(x), scalar_cast<T>(y), scalar_cast<T>(z)};
  }
};

template <Scalar S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return S(a.x * b.x + a.y * b.y + a.z * b.z);
}

template <Scalar S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {S(a.y * b.z - a.z * b.y), S(a.z * b.x - a.x * b.z), S(a.x * b.y - a.y * b.x)};
}

template <Scalar S>
Vec3<S> vector_part(const Quaternion<S>& q) {
  return {q.x, q.y, q.z};
}

template <Scalar S>
Quaternion<S> pure(const Vec3<S>& v) {
  return {S(0), v.x, v.y, v.z};
}

/// Oriented line [direction; moment] with direction . moment = 0.
template <Scalar S>
struct AxisLine {
  Vec3<S> direction;
  Vec3<S> moment;

  /// Point of the line closest to the origin: d x m / |d|^2.
  Vec3<S> foot() const { return cross(direction, moment) * S(S(1) / dot(direction, direction)); }

  static AxisLine through(const Vec3<S>& point, const Vec3<S>& direction) {
    return {direction, cross(point, direction)};
  }

  template <Scalar T>
  AxisLine<T> cast() const {
    return {direction.template cast<T>(), moment.template cast<T>()};
  }

  friend bool operator==(const AxisLine& a, const AxisLine& b) {
    return a.direction == b.direction && a.moment == b.moment;
  }
};

/// Exact for Rational; for double the caller supplies a relative tolerance.
template <Scalar S>
bool parallel(const Vec3<S>& a, const Vec3<S>& b, double rel_tol = 0.0) {
  Vec3<S> c = cross(a, b);
  if constexpr (std::same_as<S, Rational>) {
    return c.is_zero();
  } else {
    return dot(c, c) <= rel_tol * rel_tol * dot(a, a) * dot(b, b);
  }
}

enum class DisplacementKind { Rotation, Translation, Identity, General, NonDisplacement };

std::string_view to_string(DisplacementKind kind);

/// Projective image of [x0, x1, x2, x3] under h:
/// y = (p x conj(p) + x0 (p conj(d) - d conj(p))) / (p conj(p)).
template <Scalar S>
std::array<S, 4> dq_act(const DualQuaternion<S>& h, const std::array<S, 4>& point) {
  const auto& p = h.primal;
  const auto& d = h.dual;
  if (p.is_zero()) throw Error(ErrorCode::ZeroPrimal, "cannot act with zero primal part");
  if (!negligible(dq_norm(h).dual, S(p.norm2() + d.norm2()))) {
    throw Error(ErrorCode::NotADisplacement, "norm is not real");
  }
  Quaternion<S> x{point[0], point[1], point[2], point[3]};
  Quaternion<S> y = p * x * p.conj() + (p * d.conj() - d * p.conj()) * point[0];
  S n = p.norm2();
  return {S(y.w / n), S(y.x / n), S(y.y / n), S(y.z / n)};
}

/// Euclidean convenience wrapper around dq_act.
template <Scalar S>
Vec3<S> act_point(const DualQuaternion<S>& h, const Vec3<S>& v) {
  auto y = dq_act(h, std::array<S, 4>{S(1), v.x, v.y, v.z});
  return {S(y[1] / y[0]), S(y[2] / y[0]), S(y[3] / y[0])};
}

template <Scalar S>
DisplacementKind classify(const DualQuaternion<S>& h) {
  if (h.primal.is_zero()) return DisplacementKind::NonDisplacement;
  if (!negligible(dq_norm(h).dual, S(h.primal.norm2() + h.dual.norm2()))) return DisplacementKind::NonDisplacement;
  const bool h4_zero = is_zero(h.dual.w);
  const bool vec_zero = h.primal.is_real();
  const bool dual_vec_zero = h.dual.is_real();
  if (vec_zero && h.dual.is_zero()) return DisplacementKind::Identity;
  if (h4_zero && !vec_zero) return DisplacementKind::Rotation;
  if (h4_zero && vec_zero && !dual_vec_zero) return DisplacementKind::Translation;
  return DisplacementKind::General;
}

/// Plucker coordinates [h1, h2, h3; -h5, -h6, -h7] of a rotation quaternion.
template <Scalar S>
AxisLine<S> axis_of(const DualQuaternion<S>& h) {
  if (classify(h) != DisplacementKind::Rotation) {
    throw Error(ErrorCode::NotARotation, "axis_of needs a rotation quaternion");
  }
  return {vector_part(h.primal), -vector_part(h.dual)};
}

/// Image of a line under a displacement, rebuilt from the images of two of its points.
template <Scalar S>
AxisLine<S> transform_axis(const DualQuaternion<S>& pose, const AxisLine<S>& ax) {
  Vec3<S> p0 = ax.foot();
  Vec3<S> p1 = p0 + ax.direction;
  Vec3<S> q0 = act_point(pose, p0);
  Vec3<S> q1 = act_point(pose, p1);
  return AxisLine<S>::through(q0, q1 - q0);
}

}  // namespace darboux
