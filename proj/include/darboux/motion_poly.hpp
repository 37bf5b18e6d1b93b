#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "darboux/geometry.hpp"
#include "darboux/quaternion.hpp"

namespace darboux {

/// Polynomial with scalar coefficients, coeffs[i] multiplies t^i. Always central.
template <Scalar S>
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  RealPoly(std::initializer_list<S> coeffs) : coeffs_(coeffs) { trim(); }

  static RealPoly one() { return RealPoly{S(1)}; }
  /// t^2 + 1, the real factor multiplied onto the Darboux polynomial.
  static RealPoly t2_plus_1() { return RealPoly{S(1), S(0), S(1)}; }

  const std::vector<S>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  S coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S(0); }

  S operator()(const S& t) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = S(acc * t + *it);
    return acc;
  }

  friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RealPoly(std::move(out));
  }
  friend bool operator==(const RealPoly& a, const RealPoly& b) { return a.coeffs_ == b.coeffs_; }

  template <Scalar T>
  RealPoly<T> cast() const {
    std::vector<T> out;
    for (const auto& c : coeffs_) out.push_back(scalar_cast<T>(c));
    return RealPoly<T>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && darboux::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<S> coeffs_;
};

/// Polynomial in a central indeterminate t with dual quaternion coefficients,
/// coeffs[i] multiplies t^i. Trailing zero coefficients are trimmed.
template <Scalar S>
class MotionPoly {
 public:
  using Coeff = DualQuaternion<S>;

  MotionPoly() = default;
  explicit MotionPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  MotionPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit MotionPoly(const RealPoly<S>& r) {
    for (const auto& c : r.coeffs()) coeffs_.push_back(Coeff::real(c));
  }

  /// t - h
  static MotionPoly linear(const Coeff& root) { return MotionPoly{-root, Coeff::real(S(1))}; }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff{}; }
  const Coeff& leading() const { return coeffs_.back(); }

  bool is_monic() const { return !is_zero() && leading() == Coeff::real(S(1)); }

  /// For monic linear polynomials t - h, returns h.
  Coeff root() const {
    if (degree() != 1 || !is_monic()) throw Error(ErrorCode::InvalidInput, "root() needs a monic linear polynomial");
    return -coeffs_[0];
  }

  MotionPoly conj() const {
    std::vector<Coeff> out;
    for (const auto& c : coeffs_) out.push_back(c.conj());
    return MotionPoly(std::move(out));
  }

  /// Value at a real parameter t (t commutes with everything).
  Coeff operator()(const S& t) const {
    Coeff acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// Homogeneous value sum c_i s^i c^(n-i); with s = sin(phi/2), c = cos(phi/2)
  /// this is the pose at t = tan(phi/2) up to a real factor and stays finite at phi = pi.
  Coeff homogeneous(const S& s, const S& c) const {
    Coeff acc;
    const int n = degree();
    for (int i = 0; i <= n; ++i) {
      S w(1);
      for (int e = 0; e < i; ++e) w = S(w * s);
      for (int e = i; e < n; ++e) w = S(w * c);
      acc += coeffs_[i] * w;
    }
    return acc;
  }

  /// Real coefficients of the primal part if it is real, otherwise nullopt.
  std::optional<RealPoly<S>> as_real() const {
    std::vector<S> out;
    for (const auto& c : coeffs_) {
      if (!c.is_real()) return std::nullopt;
      out.push_back(c.primal.w);
    }
    return RealPoly<S>(std::move(out));
  }

  /// Primal part as a polynomial in H[t] (dual part dropped).
  MotionPoly primal_part() const {
    std::vector<Coeff> out;
    for (const auto& c : coeffs_) out.push_back(Coeff(c.primal));
    return MotionPoly(std::move(out));
  }

  friend MotionPoly operator+(const MotionPoly& a, const MotionPoly& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return MotionPoly(std::move(out));
  }
  friend MotionPoly operator-(const MotionPoly& a, const MotionPoly& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return MotionPoly(std::move(out));
  }
  friend MotionPoly operator*(const MotionPoly& a, const MotionPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return MotionPoly(std::move(out));
  }
  friend MotionPoly operator*(const Coeff& h, const MotionPoly& a) {
    std::vector<Coeff> out;
    for (const auto& c : a.coeffs_) out.push_back(h * c);
    return MotionPoly(std::move(out));
  }
  friend MotionPoly operator*(const MotionPoly& a, const Coeff& h) {
    std::vector<Coeff> out;
    for (const auto& c : a.coeffs_) out.push_back(c * h);
    return MotionPoly(std::move(out));
  }
  friend MotionPoly operator*(const RealPoly<S>& r, const MotionPoly& a) { return MotionPoly(r) * a; }
  friend MotionPoly operator*(const MotionPoly& a, const RealPoly<S>& r) { return a * MotionPoly(r); }

  friend bool operator==(const MotionPoly& a, const MotionPoly& b) { return a.coeffs_ == b.coeffs_; }

  template <Scalar T>
  MotionPoly<T> cast() const {
    std::vector<DualQuaternion<T>> out;
    for (const auto& c : coeffs_) out.push_back(c.template cast<T>());
    return MotionPoly<T>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;
};

template <Scalar S>
MotionPoly<S> mp_mul(const MotionPoly<S>& a, const MotionPoly<S>& b) {
  return a * b;
}

/// Norm polynomial C conj(C).
template <Scalar S>
MotionPoly<S> mp_norm(const MotionPoly<S>& c) {
  return c * c.conj();
}

template <Scalar S>
bool is_motion_poly(const MotionPoly<S>& c) {
  if (c.is_zero() || !c.leading().invertible()) return false;
  return mp_norm(c).as_real().has_value();
}

template <Scalar S>
struct DivMod {
  MotionPoly<S> quotient;
  MotionPoly<S> remainder;
};

/// Right division: C = Q D + R with deg R < deg D.
template <Scalar S>
DivMod<S> mp_divmod(const MotionPoly<S>& c, const MotionPoly<S>& d) {
  using Coeff = DualQuaternion<S>;
  if (d.is_zero() || !d.leading().invertible()) {
    throw Error(ErrorCode::NonInvertibleLeader, "divisor leading coefficient has zero primal part");
  }
  const int n = d.degree();
  const Coeff lead_inv = d.leading().inverse();
  // D = lead * Dm with Dm monic.
  const MotionPoly<S> dm = lead_inv * d;
  std::vector<Coeff> rem = c.coeffs();
  if (c.degree() < n) return {MotionPoly<S>{}, c};
  std::vector<Coeff> quot(c.degree() - n + 1);
  for (int k = c.degree(); k >= n; --k) {
    const Coeff lc = rem[k];
    quot[k - n] = lc;
    for (int j = 0; j <= n; ++j) rem[k - n + j] -= lc * dm.coeffs()[j];
  }
  rem.resize(n);
  // C = Qm Dm + R = (Qm lead^-1) D + R
  return {MotionPoly<S>(std::move(quot)) * lead_inv, MotionPoly<S>(std::move(rem))};
}

/// C(h) = sum c_i h^i, powers of h on the right.
template <Scalar S>
DualQuaternion<S> mp_eval_right(const MotionPoly<S>& c, const DualQuaternion<S>& h) {
  DualQuaternion<S> acc;
  DualQuaternion<S> power = DualQuaternion<S>::real(S(1));
  for (const auto& coeff : c.coeffs()) {
    acc += coeff * power;
    power = power * h;
  }
  return acc;
}

/// Generic factorization step: the right factor t - h of C with (t - h) conj(t - h) = M.
/// Throws NonGeneric when the linear remainder of C mod M has a non-invertible leader.
template <Scalar S>
DualQuaternion<S> right_factor_from_quadratic(const MotionPoly<S>& c, const RealPoly<S>& m) {
  using Coeff = DualQuaternion<S>;
  if (c.degree() < 1) throw Error(ErrorCode::InvalidInput, "need a polynomial of degree >= 1");
  if (m.degree() != 2 || m.coeff(2) != S(1)) throw Error(ErrorCode::NotADivisor, "M must be a monic quadratic");
  // Only irreducible quadratics (no real roots) are accepted.
  if (!(m.coeff(1) * m.coeff(1) - S(4) * m.coeff(0) < S(0))) {
    throw Error(ErrorCode::NotADivisor, "M has real roots");
  }
  if (!mp_divmod(mp_norm(c), MotionPoly<S>(m)).remainder.is_zero()) {
    throw Error(ErrorCode::NotADivisor, "M does not divide the norm polynomial");
  }
  const MotionPoly<S> r = mp_divmod(c, MotionPoly<S>(m)).remainder;
  const Coeff r1 = r.coeff(1);
  const Coeff r0 = r.coeff(0);
  if (!r1.invertible()) {
    throw Error(ErrorCode::NonGeneric, "remainder leading coefficient has zero primal part");
  }
  const Coeff h = -(r1.inverse() * r0);
  const MotionPoly<S> factor = MotionPoly<S>::linear(h);
  if (!(mp_norm(factor) == MotionPoly<S>(m))) {
    throw Error(ErrorCode::NotADivisor, "resulting factor does not have norm M");
  }
  return h;
}

/// Exact check: ordered product of linear factors == cofactor * target.
template <Scalar S>
bool verify_factorization(const std::vector<MotionPoly<S>>& factors, const MotionPoly<S>& target,
                          const RealPoly<S>& cofactor) {
  MotionPoly<S> prod{DualQuaternion<S>::real(S(1))};
  for (const auto& f : factors) prod = prod * f;
  return prod == cofactor * target;
}

template <Scalar S>
MotionPoly<S> product(const std::vector<MotionPoly<S>>& factors) {
  MotionPoly<S> prod{DualQuaternion<S>::real(S(1))};
  for (const auto& f : factors) prod = prod * f;
  return prod;
}

}  // namespace darboux
