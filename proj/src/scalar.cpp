#include "darboux/scalar.hpp"

#include <string>

#include "darboux/error.hpp"
#include "darboux/geometry.hpp"

namespace darboux {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw Error(ErrorCode::InvalidInput, "mixed decimal/fraction: " + s);
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits.empty() || digits == "-") throw Error(ErrorCode::InvalidInput, "bad decimal: " + s);
      mpz_class scale = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
      Rational r(mpz_class(digits, 10), scale);
      r.canonicalize();
      return r;
    }
    Rational r(s, 10);
    if (r.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidInput, "not a rational number: " + std::string(text));
  }
}

std::string to_string(const Rational& x) { return x.get_str(10); }

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotADisplacement: return "NotADisplacement";
    case ErrorCode::ZeroPrimal: return "ZeroPrimal";
    case ErrorCode::NotARotation: return "NotARotation";
    case ErrorCode::NonInvertibleLeader: return "NonInvertibleLeader";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::SingularChoice: return "SingularChoice";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::NotRotational: return "NotRotational";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::NotCircular: return "NotCircular";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string_view to_string(DisplacementKind kind) {
  switch (kind) {
    case DisplacementKind::Rotation: return "Rotation";
    case DisplacementKind::Translation: return "Translation";
    case DisplacementKind::Identity: return "Identity";
    case DisplacementKind::General: return "General";
    case DisplacementKind::NonDisplacement: return "NonDisplacement";
  }
  return "Unknown";
}

}  // namespace darboux
