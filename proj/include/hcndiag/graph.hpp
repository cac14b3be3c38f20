#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hcndiag/vertex_set.hpp"

namespace hcndiag {

enum class Origin { hypercube, hcn, custom };

[[nodiscard]] std::string_view to_string(Origin o);

struct Edge {
  VertexIndex u;
  VertexIndex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph.
///
/// Two storage modes share one interface. Materialized graphs keep CSR
/// adjacency; implicit graphs (HCN_n / Q_n for large n) compute neighbors from
/// the vertex id on demand, so local predicates scale without 2^{2n} lists.
/// Safe for concurrent readers after construction.
class Graph {
 public:
  /// Custom graph from an edge list. Throws std::invalid_argument on loops,
  /// duplicate edges or out-of-range endpoints.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          Origin origin = Origin::custom, int dimension = 0);

  /// Neighbors-on-demand HCN_n or Q_n. Used by hcn_oracle / build_hypercube.
  static Graph implicit(Origin origin, int dimension);

  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] Origin origin() const { return origin_; }
  /// n for Q_n / HCN_n; 0 for custom graphs.
  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] bool materialized() const { return !implicit_; }
  [[nodiscard]] std::size_t min_degree() const { return min_degree_; }
  [[nodiscard]] std::size_t max_degree() const { return max_degree_; }

  [[nodiscard]] std::size_t degree(VertexIndex v) const;
  [[nodiscard]] bool adjacent(VertexIndex u, VertexIndex v) const;
  [[nodiscard]] std::vector<VertexIndex> neighbors(VertexIndex v) const;

  template <class Fn>
  void for_each_neighbor(VertexIndex v, Fn&& fn) const {
    if (!implicit_) {
      for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) fn(targets_[i]);
      return;
    }
    const int n = dimension_;
    if (origin_ == Origin::hypercube) {
      for (int d = 0; d < n; ++d) fn(v ^ (VertexIndex{1} << d));
      return;
    }
    for (int d = 0; d < n; ++d) fn(v ^ (VertexIndex{1} << d));
    fn(implicit_outside_neighbor(v));
  }

  /// All edges with u < v, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Per-vertex neighbor bitmask; only for graphs with at most 64 vertices.
  [[nodiscard]] std::vector<std::uint64_t> neighbor_masks() const;

  [[nodiscard]] bool contains(VertexIndex v) const { return v < vertex_count_; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph() = default;
  [[nodiscard]] VertexIndex implicit_outside_neighbor(VertexIndex v) const;

  Origin origin_ = Origin::custom;
  int dimension_ = 0;
  bool implicit_ = false;
  std::size_t vertex_count_ = 0;
  std::size_t min_degree_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexIndex> targets_;
};

}  // namespace hcndiag
