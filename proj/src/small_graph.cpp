#include "hcndiag/detail/small_graph.hpp"

#include <limits>
#include <stdexcept>

namespace hcndiag::detail {

SmallGraph::SmallGraph(const Graph& g) {
  if (g.vertex_count() > 64) throw std::invalid_argument("exhaustive search supports at most 64 vertices");
  vertex_count = static_cast<int>(g.vertex_count());
  all = vertex_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertex_count) - 1;
  nbr = g.neighbor_masks();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace hcndiag::detail
