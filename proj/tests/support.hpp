#pragma once

#include <random>

#include "darboux/darboux.hpp"

namespace darboux::testing {

using R = Rational;
using RDQ = DualQuaternion<Rational>;
using RPoly = MotionPoly<Rational>;

inline RDQ dq(int w, int i, int j, int k, int e0 = 0, int ei = 0, int ej = 0, int ek = 0) {
  return {{R(w), R(i), R(j), R(k)}, {R(e0), R(ei), R(ej), R(ek)}};
}

inline RDQ dqr(R w, R i, R j, R k, R e0, R ei, R ej, R ek) { return {{w, i, j, k}, {e0, ei, ej, ek}}; }

/// Small random rationals p/q, |p| <= 9, 1 <= q <= 6.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  R rational() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    R r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }
  R nonzero() {
    for (;;) {
      R r = rational();
      if (sgn(r) != 0) return r;
    }
  }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  RDQ dual_quaternion() {
    return dqr(rational(), rational(), rational(), rational(), rational(), rational(), rational(), rational());
  }
  RDQ invertible() {
    for (;;) {
      RDQ h = dual_quaternion();
      if (h.invertible()) return h;
    }
  }
  Vec3<R> vec() { return {rational(), rational(), rational()}; }
  Vec3<R> nonzero_vec() {
    for (;;) {
      auto v = vec();
      if (!v.is_zero()) return v;
    }
  }

  /// h0 + v + eps (v x u): a rotation quaternion with real norm.
  RDQ rotation() {
    const Vec3<R> v = nonzero_vec();
    const Vec3<R> m = cross(v, vec());
    return {Quaternion<R>{rational(), v.x, v.y, v.z}, pure(m)};
  }
  RPoly rotation_factor() { return RPoly::linear(rotation()); }
  RPoly random_poly(int degree) {
    std::vector<RDQ> c;
    for (int i = 0; i <= degree; ++i) c.push_back(dual_quaternion());
    c.back() = invertible();
    return RPoly(std::move(c));
  }

  DarbouxParams<R> params() { return {nonzero(), rational(), rational(), std::nullopt, std::nullopt}; }
  /// Params with x, y avoiding vanishing FIII denominators.
  DarbouxParams<R> params_xy() {
    for (;;) {
      auto p = params();
      p.x = rational();
      p.y = rational();
      const R t = p.a + 2 * *p.y;
      if (sgn(t * t + 4 * *p.x * *p.x) != 0) return p;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace darboux::testing
