#include "hcndiag/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace hcndiag {

std::string_view to_string(Origin o) {
  switch (o) {
    case Origin::hypercube: return "hypercube";
    case Origin::hcn: return "hcn";
    case Origin::custom: return "custom";
  }
  return "custom";
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges, Origin origin,
                        int dimension) {
  if (vertex_count > std::numeric_limits<VertexIndex>::max()) {
    throw std::invalid_argument("Graph: too many vertices");
  }
  std::vector<std::vector<VertexIndex>> adj(vertex_count);
  for (const auto& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(e.u));
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  Graph g;
  g.origin_ = origin;
  g.dimension_ = dimension;
  g.vertex_count_ = vertex_count;
  g.offsets_.reserve(vertex_count + 1);
  g.offsets_.push_back(0);
  g.min_degree_ = vertex_count == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("Graph: duplicate edge");
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(static_cast<std::uint32_t>(g.targets_.size()));
    g.min_degree_ = std::min(g.min_degree_, list.size());
    g.max_degree_ = std::max(g.max_degree_, list.size());
  }
  return g;
}

Graph Graph::implicit(Origin origin, int dimension) {
  if (origin == Origin::custom) throw std::invalid_argument("Graph::implicit: custom origin");
  Graph g;
  g.origin_ = origin;
  g.dimension_ = dimension;
  g.implicit_ = true;
  const int bits = origin == Origin::hcn ? 2 * dimension : dimension;
  g.vertex_count_ = std::size_t{1} << bits;
  g.min_degree_ = g.max_degree_ =
      static_cast<std::size_t>(origin == Origin::hcn ? dimension + 1 : dimension);
  return g;
}

std::size_t Graph::edge_count() const {
  if (!implicit_) return targets_.size() / 2;
  return vertex_count_ * min_degree_ / 2;
}

std::size_t Graph::degree(VertexIndex v) const {
  if (!implicit_) return offsets_[v + 1] - offsets_[v];
  return min_degree_;
}

bool Graph::adjacent(VertexIndex u, VertexIndex v) const {
  if (!implicit_) {
    auto first = targets_.begin() + offsets_[u];
    auto last = targets_.begin() + offsets_[u + 1];
    return std::binary_search(first, last, v);
  }
  if (u == v) return false;
  const VertexIndex mask = (VertexIndex{1} << dimension_) - 1;
  const VertexIndex diff = u ^ v;
  if (origin_ == Origin::hypercube) return std::has_single_bit(diff);
  if ((diff & ~mask) == 0) return std::has_single_bit(diff);
  return implicit_outside_neighbor(u) == v;
}

std::vector<VertexIndex> Graph::neighbors(VertexIndex v) const {
  std::vector<VertexIndex> out;
  out.reserve(degree(v));
  for_each_neighbor(v, [&](VertexIndex w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexIndex u = 0; u < vertex_count_; ++u) {
    for (auto w : neighbors(u)) {
      if (u < w) out.push_back({u, w});
    }
  }
  return out;
}

std::vector<std::uint64_t> Graph::neighbor_masks() const {
  if (vertex_count_ > 64) throw std::invalid_argument("neighbor_masks: graph has more than 64 vertices");
  std::vector<std::uint64_t> masks(vertex_count_, 0);
  for (VertexIndex u = 0; u < vertex_count_; ++u) {
    for_each_neighbor(u, [&](VertexIndex w) { masks[u] |= std::uint64_t{1} << w; });
  }
  return masks;
}

VertexIndex Graph::implicit_outside_neighbor(VertexIndex v) const {
  const int n = dimension_;
  const VertexIndex mask = (VertexIndex{1} << n) - 1;
  const VertexIndex x = v >> n;
  const VertexIndex y = v & mask;
  if (x != y) return (y << n) | x;
  return ((~x & mask) << n) | (~y & mask);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count_ == b.vertex_count_ && a.origin_ == b.origin_ &&
         a.dimension_ == b.dimension_ && a.edges() == b.edges();
}

}  // namespace hcndiag
