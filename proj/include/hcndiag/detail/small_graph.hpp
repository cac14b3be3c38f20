#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "hcndiag/graph.hpp"

namespace hcndiag::detail {

/// Bitmask view of a graph with at most 64 vertices, used by the exponential searches.
struct SmallGraph {
  explicit SmallGraph(const Graph& g);

  int vertex_count = 0;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> nbr;

  /// Union of the neighbors of s (s itself included where adjacent).
  [[nodiscard]] std::uint64_t neighbor_union(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (; s != 0; s &= s - 1) out |= nbr[static_cast<std::size_t>(std::countr_zero(s))];
    return out;
  }
  [[nodiscard]] std::uint64_t open_neighborhood(std::uint64_t s) const { return neighbor_union(s) & ~s; }

  /// Every vertex outside f keeps at least g neighbors outside f. No properness check.
  [[nodiscard]] bool g_good(std::uint64_t f, int g) const {
    if (g <= 0) return true;
    const std::uint64_t survivors = all & ~f;
    for (std::uint64_t s = survivors; s != 0; s &= s - 1) {
      if (std::popcount(nbr[static_cast<std::size_t>(std::countr_zero(s))] & survivors) < g) return false;
    }
    return true;
  }

  /// Proper g-good-neighbor faulty set.
  [[nodiscard]] bool faulty_set(std::uint64_t f, int g) const { return f != all && g_good(f, g); }

  /// Minimum degree of the induced subgraph on s; 64 for the empty set.
  [[nodiscard]] int induced_min_degree(std::uint64_t s) const {
    int best = 64;
    for (std::uint64_t r = s; r != 0; r &= r - 1) {
      const int d = std::popcount(nbr[static_cast<std::size_t>(std::countr_zero(r))] & s);
      if (d < best) best = d;
    }
    return best;
  }

  /// Vertices of s reachable from the lowest member of s inside G[s].
  [[nodiscard]] std::uint64_t component_of_lowest(std::uint64_t s) const {
    if (s == 0) return 0;
    std::uint64_t seen = s & (~s + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      const std::uint64_t next = neighbor_union(frontier) & s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }
};

/// Lexicographic comparison of the sorted member lists of two masks.
[[nodiscard]] inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const int low = std::countr_zero(diff);
  const std::uint64_t above = ~((std::uint64_t{2} << low) - 1);
  // Members below `low` agree. The side holding `low` is smaller unless the
  // other side has nothing left (then the other side is a proper prefix).
  if ((a >> low) & 1U) return (b & above) != 0;
  return (a & above) == 0;
}

/// Cardinality first, then lexicographic.
[[nodiscard]] inline bool canonical_less(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

/// Calls fn(mask) for every k-subset of [0, n) in lexicographic order of the
/// sorted index list. Stops early and returns false if fn returns false.
template <class Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  std::array<int, 64> idx{};
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i = 0; i < k; ++i) mask |= std::uint64_t{1} << idx[static_cast<std::size_t>(i)];
    if (!fn(mask)) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Like for_each_combination but over the set bits of `pool` (k-subsets of pool).
template <class Fn>
bool for_each_subset_of(std::uint64_t pool, int k, Fn&& fn) {
  std::array<int, 64> bits{};
  int m = 0;
  for (std::uint64_t p = pool; p != 0; p &= p - 1) bits[static_cast<std::size_t>(m++)] = std::countr_zero(p);
  return for_each_combination(m, k, [&](std::uint64_t local) {
    std::uint64_t mask = 0;
    for (; local != 0; local &= local - 1) {
      mask |= std::uint64_t{1} << bits[static_cast<std::size_t>(std::countr_zero(local))];
    }
    return fn(mask);
  });
}

/// C(n, k), saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t binomial(int n, int k);

}  // namespace hcndiag::detail
