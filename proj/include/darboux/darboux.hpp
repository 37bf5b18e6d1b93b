#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "darboux/motion_poly.hpp"

namespace darboux {

/// Constants of the general Darboux motion; x, y only matter for FIII.
template <Scalar S>
struct DarbouxParams {
  S a{1}, b{0}, c{0};
  std::optional<S> x{}, y{};

  S x_or_zero() const { return x ? *x : S(0); }
  S y_or_zero() const { return y ? *y : S(0); }

  template <Scalar T>
  DarbouxParams<T> cast() const {
    DarbouxParams<T> out{scalar_cast<T>(a), scalar_cast<T>(b), scalar_cast<T>(c), std::nullopt, std::nullopt};
    if (x) out.x = scalar_cast<T>(*x);
    if (y) out.y = scalar_cast<T>(*y);
    return out;
  }
};

enum class FactorizationLabel { FI, FII, FIII, FIV };

std::string_view to_string(FactorizationLabel label);
FactorizationLabel parse_label(std::string_view text);

/// Ordered monic linear factors whose product is cofactor * C.
template <Scalar S>
struct Factorization {
  FactorizationLabel label{FactorizationLabel::FI};
  std::vector<MotionPoly<S>> factors;
  std::vector<std::string> names;
  RealPoly<S> cofactor = RealPoly<S>::one();
  DarbouxParams<S> params;

  /// Index pairs (i, i+1) of equal neighbouring factors; each collapses to one joint.
  std::vector<std::pair<std::size_t, std::size_t>> identical_adjacent() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
      if (factors[i] == factors[i + 1]) out.emplace_back(i, i + 1);
    return out;
  }

  MotionPoly<S> product() const { return darboux::product(factors); }

  template <Scalar T>
  Factorization<T> cast() const {
    Factorization<T> out;
    out.label = label;
    for (const auto& f : factors) out.factors.push_back(f.template cast<T>());
    out.names = names;
    out.cofactor = cofactor.template cast<T>();
    out.params = params.template cast<T>();
    return out;
  }
};

namespace detail {

template <Scalar S>
void require_general(const DarbouxParams<S>& p) {
  if (is_zero(p.a)) throw Error(ErrorCode::DegenerateParams, "a = 0: vertical Darboux excluded");
}

template <Scalar S>
DualQuaternion<S> dq(S w, S i, S j, S k, S e0, S ei, S ej, S ek) {
  return {{w, i, j, k}, {e0, ei, ej, ek}};
}

}  // namespace detail

/// C0 = (k + c eps) C, the parameterization obtained from the homogeneous transformation matrix.
template <Scalar S>
MotionPoly<S> darboux_c0(const DarbouxParams<S>& p) {
  detail::require_general(p);
  const S z(0);
  const S& a = p.a;
  const S& b = p.b;
  const S& c = p.c;
  return MotionPoly<S>{
      detail::dq<S>(S(1), z, z, z, z, z, z, z),
      detail::dq<S>(z, z, z, S(1), z, z, S(-a), S(-b)),
      detail::dq<S>(S(1), z, z, z, b, S(-a), z, S(-c)),
      detail::dq<S>(z, z, z, S(1), c, z, z, z),
  };
}

/// C = t^3 - (k - eps(a j - b k)) t^2 + (1 - eps(b + a i - c k)) t - k + c eps
template <Scalar S>
MotionPoly<S> darboux_c(const DarbouxParams<S>& p) {
  detail::require_general(p);
  const S z(0);
  const S& a = p.a;
  const S& b = p.b;
  const S& c = p.c;
  return MotionPoly<S>{
      detail::dq<S>(z, z, z, S(-1), c, z, z, z),
      detail::dq<S>(S(1), z, z, z, S(-b), S(-a), z, c),
      detail::dq<S>(z, z, z, S(-1), z, z, a, S(-b)),
      detail::dq<S>(S(1), z, z, z, z, z, z, z),
  };
}

/// The constant displacement k + c eps relating the two parameterizations.
template <Scalar S>
DualQuaternion<S> darboux_frame_change(const DarbouxParams<S>& p) {
  const S z(0);
  return detail::dq<S>(z, z, z, S(1), p.c, z, z, z);
}

/// Closed-form Darboux point path for motion angle phi.
Vec3<double> darboux_point_path(const DarbouxParams<double>& p, const Vec3<double>& moving_point, double phi);

/// E = (2ac i + 2ab j + (a^2 - b^2 - c^2) k) / (a^2 + b^2 + c^2)
template <Scalar S>
Vec3<S> darboux_e(const DarbouxParams<S>& p) {
  const S& a = p.a;
  const S& b = p.b;
  const S& c = p.c;
  const S n = a * a + b * b + c * c;
  return {S(2 * a * c / n), S(2 * a * b / n), S((a * a - b * b - c * c) / n)};
}

/// FI: C = Q1 Q2 Q3 with Q1 Q2 a circular translation.
template <Scalar S>
Factorization<S> factor_fi(const DarbouxParams<S>& p) {
  detail::require_general(p);
  const S z(0);
  const S& a = p.a;
  const S& b = p.b;
  const S& c = p.c;
  const Vec3<S> e = darboux_e(p);
  Factorization<S> f;
  f.label = FactorizationLabel::FI;
  f.params = p;
  f.cofactor = RealPoly<S>::one();
  // Constant coefficients of Q1, Q2, Q3 (each factor is t + constant).
  auto q1 = detail::dq<S>(z, e.x, e.y, e.z, z, S(-b * c / a), S((a * a + c * c - b * b) / (2 * a)), S(-b));
  auto q2 = detail::dq<S>(z, S(-e.x), S(-e.y), S(-e.z), z, z, z, z);
  auto q3 = detail::dq<S>(z, z, z, S(-1), z, S(b * c / a), S((a * a + b * b - c * c) / (2 * a)), z);
  for (const auto& c0 : {q1, q2, q3}) f.factors.push_back(MotionPoly<S>{c0, DualQuaternion<S>::real(S(1))});
  f.names = {"Q1", "Q2", "Q3"};
  return f;
}

/// FII: P C = Q7 Q6 Q6 Q5 Q4 with Q4 = t - k.
template <Scalar S>
Factorization<S> factor_fii(const DarbouxParams<S>& p) {
  detail::require_general(p);
  const S z(0);
  const S& a = p.a;
  const S& b = p.b;
  const S& c = p.c;
  auto lin = [](DualQuaternion<S> c0) { return MotionPoly<S>{std::move(c0), DualQuaternion<S>::real(S(1))}; };
  const auto q7 = lin(detail::dq<S>(z, S(1), z, z, z, z, S((a + c) / 2), S(-b / 2)));
  const auto q6 = lin(detail::dq<S>(z, S(-1), z, z, z, z, z, z));
  const auto q5 = lin(detail::dq<S>(z, S(1), z, z, z, z, S((a - c) / 2), S(-b / 2)));
  const auto q4 = lin(detail::dq<S>(z, z, z, S(-1), z, z, z, z));
  Factorization<S> f;
  f.label = FactorizationLabel::FII;
  f.params = p;
  f.cofactor = RealPoly<S>::t2_plus_1();
  f.factors = {q7, q6, q6, q5, q4};
  f.names = {"Q7", "Q6", "Q6", "Q5", "Q4"};
  return f;
}

/// Q'4 = t - k - x i eps - y j eps.
template <Scalar S>
MotionPoly<S> fiii_q4(const DarbouxParams<S>& p) {
  const S z(0);
  return MotionPoly<S>{detail::dq<S>(z, z, z, S(-1), z, S(-p.x_or_zero()), S(-p.y_or_zero()), z),
                       DualQuaternion<S>::real(S(1))};
}

/// Closed forms of Q'5 and Q'6; throws SingularChoice on vanishing denominators.
template <Scalar S>
std::pair<MotionPoly<S>, MotionPoly<S>> fiii_q5_q6(const DarbouxParams<S>& p) {
  detail::require_general(p);
  const S z(0);
  const S& a = p.a;
  const S& b = p.b;
  const S& c = p.c;
  const S x = p.x_or_zero();
  const S y = p.y_or_zero();
  const S t_ab = a + 2 * y;
  const S den1 = t_ab * t_ab + 4 * x * x;
  const S den2 = b * b + c * c + den1;
  if (is_zero(den1) || is_zero(den2)) {
    throw Error(ErrorCode::SingularChoice, "T^2 + 4x^2 vanishes (y = -a/2 with x = 0)");
  }
  const S q5i = S((b * b * x - a * b * c - 2 * b * c * y - c * c * x) / den1 + x);
  const S q5j = S((a * b * b - a * c * c + 2 * b * b * y + 4 * b * c * x - 2 * c * c * y) / (2 * den1) + a / 2 + y);
  const S q6i = S(-2 * (a * c - 2 * b * x + 2 * c * y) / den2);
  const S q6j = S(2 * (a * b + 2 * b * y + 2 * c * x) / den2);
  const S q6k = S((t_ab * t_ab - b * b - c * c + 4 * x * x) / den2);
  const auto one = DualQuaternion<S>::real(S(1));
  return {MotionPoly<S>{detail::dq<S>(z, z, z, S(1), z, q5i, q5j, z), one},
          MotionPoly<S>{detail::dq<S>(z, q6i, q6j, q6k, z, z, z, z), one}};
}

/// FIII: P C = Q'7 Q'6 Q'5 Q'4 Q'4; Q'7 comes from exact right division.
template <Scalar S>
Factorization<S> factor_fiii(const DarbouxParams<S>& p) {
  detail::require_general(p);
  const auto [q5, q6] = fiii_q5_q6(p);
  const auto q4 = fiii_q4(p);
  const RealPoly<S> cof = RealPoly<S>::t2_plus_1();
  const MotionPoly<S> target = cof * darboux_c(p);
  const auto dm = mp_divmod(target, q6 * q5 * q4 * q4);
  if (!dm.remainder.is_zero() || dm.quotient.degree() != 1 || !dm.quotient.is_monic()) {
    throw Error(ErrorCode::SingularChoice, "Q'6 Q'5 Q'4^2 does not right-divide P C");
  }
  Factorization<S> f;
  f.label = FactorizationLabel::FIII;
  f.params = p;
  if (!f.params.x) f.params.x = S(0);
  if (!f.params.y) f.params.y = S(0);
  f.cofactor = cof;
  f.factors = {dm.quotient, q6, q5, q4, q4};
  f.names = {"Q'7", "Q'6", "Q'5", "Q'4", "Q'4"};
  return f;
}

/// The exceptional instance a=1, b=2, c=0, x=y=0: both chains of the 7R linkage.
struct FivFactorization {
  Factorization<Rational> fi_side;    // Q''1 Q''2 Q''3, cofactor 1
  Factorization<Rational> fiii_side;  // Q''7 Q''6 Q''5 Q''4 Q''4, cofactor P
};

FivFactorization factor_fiv();
DarbouxParams<Rational> fiv_params();

/// Rebuilds the factorization of a given label for the given parameters.
Factorization<Rational> make_factorization(FactorizationLabel label, const DarbouxParams<Rational>& p);

// --- Independent derivation route -----------------------------------------

/// True iff Q is a monic quadratic with primal part t^2 + 1 whose translation
/// orbits are circles (|d0 - d2| = |d1|, (d0 - d2) . d1 = 0, d1 != 0).
bool is_circular_translation(const MotionPoly<Rational>& q);

/// Right factor t - (q0 + eps u) of a monic cubic C such that the quotient is a
/// circular translation. q0 is the primal root (a unit vector quaternion).
MotionPoly<Rational> circular_right_factor(const MotionPoly<Rational>& c, const Vec3<Rational>& primal_root);

/// Splits a circular translation Q = L R with R = t - r, r the unit normal of the
/// orbit plane through the origin.
std::pair<MotionPoly<Rational>, MotionPoly<Rational>> split_circular_translation(const MotionPoly<Rational>& q);

/// FI re-derived from C alone.
Factorization<Rational> derive_fi(const DarbouxParams<Rational>& p);

/// FIII re-derived: C2 = P C / Q'4^2, then the FI-style steps on C2.
Factorization<Rational> derive_fiii(const DarbouxParams<Rational>& p);

}  // namespace darboux
