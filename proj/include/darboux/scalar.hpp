#pragma once

#include <cmath>

#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace darboux {

/// Exact backend. All algebraic identities are certified with this type.
using Rational = mpq_class;

template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, double>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

/// Zero test for quantities that vanish identically in exact arithmetic;
/// doubles get a relative allowance against `scale`.
inline bool negligible(const Rational& x, const Rational&) { return sgn(x) == 0; }
inline bool negligible(double x, double scale) { return std::abs(x) <= 1e-10 * scale; }

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

template <Scalar To>
To scalar_cast(const Rational& x) {
  if constexpr (std::same_as<To, double>) {
    return x.get_d();
  } else {
    return x;
  }
}

template <Scalar To>
To scalar_cast(double x) {
  if constexpr (std::same_as<To, double>) {
    return x;
  } else {
    return Rational(x);
  }
}

/// Accepts "p", "p/q" and finite decimals such as "-0.25" (converted exactly).
Rational parse_rational(std::string_view text);

/// Canonical GMP form: "3", "-3/2".
std::string to_string(const Rational& x);

}  // namespace darboux
