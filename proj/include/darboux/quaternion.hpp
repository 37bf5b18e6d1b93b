#pragma once

#include <array>
#include <ostream>

#include "darboux/error.hpp"
#include "darboux/scalar.hpp"

namespace darboux {

/// w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1.
template <Scalar S>
struct Quaternion {
  S w{0}, x{0}, y{0}, z{0};

  Quaternion() = default;
  Quaternion(S w_, S x_, S y_, S z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  static Quaternion real(S v) { return {std::move(v), S(0), S(0), S(0)}; }
  static Quaternion i() { return {S(0), S(1), S(0), S(0)}; }
  static Quaternion j() { return {S(0), S(0), S(1), S(0)}; }
  static Quaternion k() { return {S(0), S(0), S(0), S(1)}; }

  bool is_zero() const {
    return darboux::is_zero(w) && darboux::is_zero(x) && darboux::is_zero(y) && darboux::is_zero(z);
  }
  bool is_real() const { return darboux::is_zero(x) && darboux::is_zero(y) && darboux::is_zero(z); }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  /// q * conj(q), always real.
  S norm2() const { return S(w * w + x * x + y * y + z * z); }

  Quaternion inverse() const {
    S n = norm2();
    if (darboux::is_zero(n)) throw Error(ErrorCode::ZeroPrimal, "quaternion has no inverse");
    return conj() * (S(1) / n);
  }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {S(a.w + b.w), S(a.x + b.x), S(a.y + b.y), S(a.z + b.z)};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {S(a.w - b.w), S(a.x - b.x), S(a.y - b.y), S(a.z - b.z)};
  }
  friend Quaternion operator-(const Quaternion& a) { return {S(-a.w), S(-a.x), S(-a.y), S(-a.z)}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {S(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z),
            S(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
            S(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x),
            S(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w)};
  }
  friend Quaternion operator*(const Quaternion& a, const S& s) {
    return {S(a.w * s), S(a.x * s), S(a.y * s), S(a.z * s)};
  }
  friend Quaternion operator*(const S& s, const Quaternion& a) { return a * s; }
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }

  template <Scalar T>
  Quaternion<T> cast() const {
    return {scalar_cast<T>(w), scalar_cast<T>(x), scalar_cast<T>(y), scalar_cast<T>(z)};
  }
};

/// a + eps b with eps^2 = 0.
template <Scalar S>
struct DualNumber {
  S real{0}, dual{0};

  friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
    return {S(a.real * b.real), S(a.real * b.dual + a.dual * b.real)};
  }
  friend bool operator==(const DualNumber& a, const DualNumber& b) {
    return a.real == b.real && a.dual == b.dual;
  }
};

/// h = p + eps d; coefficient order (h0..h7) = (p.w, p.x, p.y, p.z, d.w, d.x, d.y, d.z).
template <Scalar S>
struct DualQuaternion {
  Quaternion<S> primal;
  Quaternion<S> dual;

  DualQuaternion() = default;
  DualQuaternion(Quaternion<S> p, Quaternion<S> d) : primal(std::move(p)), dual(std::move(d)) {}
  explicit DualQuaternion(Quaternion<S> p) : primal(std::move(p)) {}

  static DualQuaternion real(S v) { return DualQuaternion(Quaternion<S>::real(std::move(v))); }
  static DualQuaternion from_coefficients(const std::array<S, 8>& h) {
    return {{h[0], h[1], h[2], h[3]}, {h[4], h[5], h[6], h[7]}};
  }
  std::array<S, 8> coefficients() const {
    return {primal.w, primal.x, primal.y, primal.z, dual.w, dual.x, dual.y, dual.z};
  }

  bool is_zero() const { return primal.is_zero() && dual.is_zero(); }
  bool is_real() const { return primal.is_real() && dual.is_zero(); }
  bool invertible() const { return !primal.is_zero(); }

  DualQuaternion conj() const { return {primal.conj(), dual.conj()}; }

  /// (p + eps d)^-1 = p^-1 - eps p^-1 d p^-1
  DualQuaternion inverse() const {
    if (!invertible()) throw Error(ErrorCode::NonInvertibleLeader, "dual quaternion has zero primal part");
    Quaternion<S> pi = primal.inverse();
    return {pi, -(pi * dual * pi)};
  }

  friend DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal + b.primal, a.dual + b.dual};
  }
  friend DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal - b.primal, a.dual - b.dual};
  }
  friend DualQuaternion operator-(const DualQuaternion& a) { return {-a.primal, -a.dual}; }
  friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
  }
  friend DualQuaternion operator*(const DualQuaternion& a, const S& s) { return {a.primal * s, a.dual * s}; }
  friend DualQuaternion operator*(const S& s, const DualQuaternion& a) { return a * s; }
  DualQuaternion& operator+=(const DualQuaternion& o) { return *this = *this + o; }
  DualQuaternion& operator-=(const DualQuaternion& o) { return *this = *this - o; }

  friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
    return a.primal == b.primal && a.dual == b.dual;
  }

  template <Scalar T>
  DualQuaternion<T> cast() const {
    return {primal.template cast<T>(), dual.template cast<T>()};
  }
};

template <Scalar S>
DualQuaternion<S> dq_mul(const DualQuaternion<S>& a, const DualQuaternion<S>& b) {
  return a * b;
}

template <Scalar S>
DualQuaternion<S> dq_conj(const DualQuaternion<S>& h) {
  return h.conj();
}

/// Norm(h) = h conj(h) = p conj(p) + eps (p conj(d) + d conj(p)).
template <Scalar S>
DualNumber<S> dq_norm(const DualQuaternion<S>& h) {
  Quaternion<S> re = h.primal * h.primal.conj();
  Quaternion<S> du = h.primal * h.dual.conj() + h.dual * h.primal.conj();
  const S scale = h.primal.norm2() + h.dual.norm2();
  auto real_part_only = [&](const Quaternion<S>& q) {
    return negligible(q.x, scale) && negligible(q.y, scale) && negligible(q.z, scale);
  };
  if (!real_part_only(re) || !real_part_only(du)) {
    throw Error(ErrorCode::InvalidInput, "dual quaternion norm is not a dual number");
  }
  return {re.w, du.w};
}

/// Basis elements used throughout: 1, i, j, k and eps-multiples.
template <Scalar S>
struct DQ {
  static DualQuaternion<S> one() { return DualQuaternion<S>::real(S(1)); }
  static DualQuaternion<S> eps() { return {Quaternion<S>{}, Quaternion<S>::real(S(1))}; }
  static DualQuaternion<S> i() { return DualQuaternion<S>(Quaternion<S>::i()); }
  static DualQuaternion<S> j() { return DualQuaternion<S>(Quaternion<S>::j()); }
  static DualQuaternion<S> k() { return DualQuaternion<S>(Quaternion<S>::k()); }
  static DualQuaternion<S> eps_i() { return {Quaternion<S>{}, Quaternion<S>::i()}; }
  static DualQuaternion<S> eps_j() { return {Quaternion<S>{}, Quaternion<S>::j()}; }
  static DualQuaternion<S> eps_k() { return {Quaternion<S>{}, Quaternion<S>::k()}; }
};

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Quaternion<S>& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const DualQuaternion<S>& h) {
  return os << h.primal << " + eps" << h.dual;
}

}  // namespace darboux
