#pragma once

#include <optional>
#include <vector>

#include "darboux/scalar.hpp"

namespace darboux::detail {

/// Solves rows * x = rhs exactly by Gauss-Jordan elimination. Returns nullopt
/// when the system is inconsistent or the solution is not unique.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

}  // namespace darboux::detail
