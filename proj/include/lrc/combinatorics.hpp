#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace lrc {

/// C(n, k) saturating at UINT64_MAX.
inline std::uint64_t binomial_saturating(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Visits every k-subset of {0..n-1} in lexicographic order. `visit` receives
/// the current combination and returns false to stop early. Returns false iff
/// stopped early.
template <class Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return true;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (!visit(static_cast<const std::vector<int>&>(c))) return false;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace lrc
