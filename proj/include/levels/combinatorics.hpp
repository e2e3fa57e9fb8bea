#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace levels {

/// Binomial coefficient; zero when k < 0, n < 0 or k > n.
std::int64_t binom(long n, long k);

/// floor(a / b) for b > 0, correct for negative a.
constexpr long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

/// Calls visit(subset) for every k-subset of {0, ..., n-1}, lexicographically.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit);

}  // namespace levels
