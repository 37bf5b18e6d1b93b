#include "darboux/darboux.hpp"

#include <array>
#include <cmath>
#include <string>

#include "darboux/exact_linear.hpp"

namespace darboux {

std::string_view to_string(FactorizationLabel label) {
  switch (label) {
    case FactorizationLabel::FI: return "FI";
    case FactorizationLabel::FII: return "FII";
    case FactorizationLabel::FIII: return "FIII";
    case FactorizationLabel::FIV: return "FIV";
  }
  return "FI";
}

FactorizationLabel parse_label(std::string_view text) {
  if (text == "FI") return FactorizationLabel::FI;
  if (text == "FII") return FactorizationLabel::FII;
  if (text == "FIII") return FactorizationLabel::FIII;
  if (text == "FIV") return FactorizationLabel::FIV;
  throw Error(ErrorCode::InvalidInput, "unknown factorization label " + std::string(text));
}

Vec3<double> darboux_point_path(const DarbouxParams<double>& p, const Vec3<double>& m, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {m.x * c - m.y * s, m.x * s + m.y * c + p.a * s, m.z + p.b * s + p.c * (1.0 - c)};
}

DarbouxParams<Rational> fiv_params() {
  return {Rational(1), Rational(2), Rational(0), Rational(0), Rational(0)};
}

FivFactorization factor_fiv() {
  const auto p = fiv_params();
  FivFactorization out{factor_fi(p), factor_fiii(p)};
  out.fi_side.names = {"Q''1", "Q''2", "Q''3"};
  out.fiii_side.label = FactorizationLabel::FIV;
  out.fiii_side.names = {"Q''7", "Q''6", "Q''5", "Q''4", "Q''4"};
  return out;
}

Factorization<Rational> make_factorization(FactorizationLabel label, const DarbouxParams<Rational>& p) {
  switch (label) {
    case FactorizationLabel::FI: return factor_fi(p);
    case FactorizationLabel::FII: return factor_fii(p);
    case FactorizationLabel::FIII: return factor_fiii(p);
    case FactorizationLabel::FIV: return factor_fiv().fiii_side;
  }
  throw Error(ErrorCode::InvalidInput, "unknown label");
}

namespace {

using RPoly = MotionPoly<Rational>;
using RDQ = DualQuaternion<Rational>;

struct CircleResiduals {
  Rational radius_gap;  // |d0 - d2|^2 - |d1|^2
  Rational skew;        // (d0 - d2) . d1
};

// Dual vector parts of a monic quadratic Q = t^2 + 1 + eps D.
std::array<Vec3<Rational>, 3> dual_vectors(const RPoly& q) {
  return {vector_part(q.coeff(0).dual), vector_part(q.coeff(1).dual), vector_part(q.coeff(2).dual)};
}

CircleResiduals circle_residuals(const RPoly& q) {
  const auto d = dual_vectors(q);
  const Vec3<Rational> e = d[0] - d[2];
  return {dot(e, e) - dot(d[1], d[1]), dot(e, d[1])};
}

bool primal_is_t2_plus_1(const RPoly& q) {
  return q.degree() == 2 && q.primal_part() == RPoly(RealPoly<Rational>::t2_plus_1());
}

// Two rational vectors spanning the plane orthogonal to n.
std::pair<Vec3<Rational>, Vec3<Rational>> orthogonal_basis(const Vec3<Rational>& n) {
  const Rational ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  Vec3<Rational> e{Rational(1), Rational(0), Rational(0)};
  if (ay <= ax && ay <= az) e = {Rational(0), Rational(1), Rational(0)};
  if (az <= ax && az <= ay) e = {Rational(0), Rational(0), Rational(1)};
  const Vec3<Rational> b1 = cross(n, e);
  return {b1, cross(n, b1)};
}

// Residual vector of the right-factor conditions at a trial dual part u.
std::vector<Rational> factor_residuals(const RPoly& c, const Vec3<Rational>& root, const Vec3<Rational>& u) {
  const RDQ q{pure(root), pure(u)};
  std::vector<Rational> out;
  for (const auto& v : mp_eval_right(c, q).coefficients()) out.push_back(v);
  const auto quotient = mp_divmod(c, RPoly::linear(q)).quotient;
  const auto circ = circle_residuals(quotient);
  out.push_back(circ.radius_gap);
  out.push_back(circ.skew);
  return out;
}

}  // namespace

bool is_circular_translation(const MotionPoly<Rational>& q) {
  if (!q.is_monic() || !primal_is_t2_plus_1(q)) return false;
  for (const auto& coeff : q.coeffs())
    if (sgn(coeff.dual.w) != 0) return false;
  const auto d = dual_vectors(q);
  if (d[1].is_zero()) return false;
  const auto circ = circle_residuals(q);
  return sgn(circ.radius_gap) == 0 && sgn(circ.skew) == 0;
}

MotionPoly<Rational> circular_right_factor(const MotionPoly<Rational>& c, const Vec3<Rational>& primal_root) {
  if (c.degree() != 3 || !c.is_monic()) throw Error(ErrorCode::InvalidInput, "need a monic cubic");
  if (dot(primal_root, primal_root) != 1) throw Error(ErrorCode::InvalidInput, "primal root must be a unit vector");
  const RPoly primal_factor = RPoly::linear(RDQ(pure(primal_root)));
  const auto primal_div = mp_divmod(c.primal_part(), primal_factor);
  if (!primal_div.remainder.is_zero() || !primal_is_t2_plus_1(primal_div.quotient)) {
    throw Error(ErrorCode::NotCircular, "primal part is not (t^2 + 1)(t - q0)");
  }

  // Every residual is a polynomial of degree <= 2 in the coordinates (v, w)
  // of u = v b1 + w b2; recover its coefficients from six evaluations.
  const auto [b1, b2] = orthogonal_basis(primal_root);
  auto at = [&](int v, int w) { return factor_residuals(c, primal_root, b1 * Rational(v) + b2 * Rational(w)); };
  const auto f00 = at(0, 0), fp0 = at(1, 0), fm0 = at(-1, 0), f0p = at(0, 1), f0m = at(0, -1), fpp = at(1, 1);

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t r = 0; r < f00.size(); ++r) {
    const Rational c10 = (fp0[r] - fm0[r]) / 2;
    const Rational c01 = (f0p[r] - f0m[r]) / 2;
    const Rational c20 = (fp0[r] + fm0[r]) / 2 - f00[r];
    const Rational c02 = (f0p[r] + f0m[r]) / 2 - f00[r];
    const Rational c11 = fpp[r] - f00[r] - c10 - c01 - c20 - c02;
    if (sgn(c20) != 0 || sgn(c02) != 0 || sgn(c11) != 0) {
      throw Error(ErrorCode::NotCircular, "circularity conditions are not linear in the dual part");
    }
    rows.push_back({c10, c01});
    rhs.push_back(-f00[r]);
  }
  const auto sol = detail::solve_unique(std::move(rows), std::move(rhs));
  if (!sol) throw Error(ErrorCode::NotCircular, "no unique circular right factor");

  const Vec3<Rational> u = b1 * (*sol)[0] + b2 * (*sol)[1];
  const RPoly factor = RPoly::linear(RDQ{pure(primal_root), pure(u)});
  const auto dm = mp_divmod(c, factor);
  if (!dm.remainder.is_zero() || !is_circular_translation(dm.quotient)) {
    throw Error(ErrorCode::NotCircular, "derived factor fails verification");
  }
  return factor;
}

std::pair<MotionPoly<Rational>, MotionPoly<Rational>> split_circular_translation(const MotionPoly<Rational>& q) {
  if (!is_circular_translation(q)) throw Error(ErrorCode::NotCircular, "not a circular translation");
  const auto d = dual_vectors(q);
  const Vec3<Rational> e = d[0] - d[2];
  // |e x d1| = |d1|^2 because e and d1 are orthogonal and of equal length.
  const Vec3<Rational> r = cross(e, d[1]) * Rational(-1 / dot(d[1], d[1]));
  const RPoly right = RPoly::linear(RDQ(pure(r)));
  const auto dm = mp_divmod(q, right);
  if (!dm.remainder.is_zero()) throw Error(ErrorCode::NotCircular, "normal axis is not a right factor");
  return {dm.quotient, right};
}

Factorization<Rational> derive_fi(const DarbouxParams<Rational>& p) {
  const RPoly c = darboux_c(p);
  const RPoly q3 = circular_right_factor(c, {Rational(0), Rational(0), Rational(1)});
  const auto [q1, q2] = split_circular_translation(mp_divmod(c, q3).quotient);
  Factorization<Rational> f;
  f.label = FactorizationLabel::FI;
  f.params = p;
  f.factors = {q1, q2, q3};
  f.names = {"Q1", "Q2", "Q3"};
  return f;
}

Factorization<Rational> derive_fiii(const DarbouxParams<Rational>& p) {
  detail::require_general(p);
  const auto cof = RealPoly<Rational>::t2_plus_1();
  const RPoly q4 = fiii_q4(p);
  const auto dm = mp_divmod(cof * darboux_c(p), q4 * q4);
  if (!dm.remainder.is_zero()) throw Error(ErrorCode::SingularChoice, "Q'4^2 does not right-divide P C");
  const RPoly& c2 = dm.quotient;
  const RPoly q5 = circular_right_factor(c2, {Rational(0), Rational(0), Rational(-1)});
  const auto [q7, q6] = split_circular_translation(mp_divmod(c2, q5).quotient);
  Factorization<Rational> f;
  f.label = FactorizationLabel::FIII;
  f.params = p;
  if (!f.params.x) f.params.x = Rational(0);
  if (!f.params.y) f.params.y = Rational(0);
  f.cofactor = cof;
  f.factors = {q7, q6, q5, q4, q4};
  f.names = {"Q'7", "Q'6", "Q'5", "Q'4", "Q'4"};
  return f;
}

}  // namespace darboux
