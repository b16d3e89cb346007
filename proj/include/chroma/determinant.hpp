#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chroma {

template <class Ring>
using SquareMatrix = std::vector<std::vector<Ring>>;

// Determinant over a commutative ring without division: expansion by
// minors, dynamic programming over the set of columns already used by the
// leading rows. O(2^k * k) ring operations, fine for k <= 16.
//
// Ring needs copy, +=, *, unary -, and `bool is_zero(const Ring&)` found by
// ADL or the `is_zero` predicate argument.
template <class Ring, class IsZero>
Ring determinant(const SquareMatrix<Ring>& m, const Ring& zero, const Ring& one,
                 IsZero&& is_zero) {
  const std::size_t k = m.size();
  for (const auto& row : m) {
    if (row.size() != k) throw std::invalid_argument("determinant: matrix is not square");
  }
  if (k == 0) return one;
  if (k > 20) throw std::invalid_argument("determinant: dimension too large");

  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<Ring> dp(std::size_t{1} << k, zero);
  std::vector<bool> live(std::size_t{1} << k, false);
  dp[0] = one;
  live[0] = true;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!live[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < k; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if (mask & bit) continue;
      const Ring& entry = m[row][col];
      if (is_zero(entry)) continue;
      // Columns used by earlier rows that lie to the right of `col` are the
      // inversions created by placing `col` in this row.
      const int inversions = std::popcount(mask & ~((bit << 1) - 1));
      Ring term = dp[mask] * entry;
      if (inversions % 2 == 1) term = -term;
      dp[mask | bit] += term;
      live[mask | bit] = true;
    }
    if (mask != 0) dp[mask] = zero;
  }
  return live[full] ? dp[full] : zero;
}

}  // namespace chroma
