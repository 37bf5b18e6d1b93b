#include "darboux/exact_linear.hpp"

#include <utility>

namespace darboux::detail {

std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  if (rows.empty()) return std::nullopt;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
      rhs[r] -= factor * rhs[rank];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r)
    if (sgn(rhs[r]) != 0) return std::nullopt;
  if (rank < n) return std::nullopt;
  // Pivots sit on the diagonal once rank == n.
  return std::vector<Rational>(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace darboux::detail
