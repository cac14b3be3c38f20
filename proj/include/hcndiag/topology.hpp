#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hcndiag/graph.hpp"

namespace hcndiag {

inline constexpr int kMaxDimension = 15;
inline constexpr int kMaxMaterializedHcn = 7;

/// n binary digits. Bit i of `bits` is string position i counted from the
/// right, so to_string() prints the most significant position first.
class BitString {
 public:
  BitString(std::uint32_t bits, int width);

  [[nodiscard]] std::uint32_t bits() const { return bits_; }
  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] BitString complement() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::uint32_t bits_;
  int width_;
};

/// Vertex (x, y) of HCN_n: cube address x, position y inside xQ_n.
struct HcnVertex {
  BitString x;
  BitString y;

  [[nodiscard]] VertexIndex encode() const;
  [[nodiscard]] static HcnVertex decode(int n, VertexIndex id);
  [[nodiscard]] std::string to_string() const;  // "(x,y)"

  friend bool operator==(const HcnVertex&, const HcnVertex&) = default;
};

/// A Q_g inside cube `cube`: positions in `free_positions` vary, every other
/// position of y takes the matching bit of `fixed_bits`.
struct SubcubeSpec {
  BitString cube;
  std::vector<int> free_positions;
  std::uint32_t fixed_bits = 0;

  [[nodiscard]] int dimension() const { return static_cast<int>(free_positions.size()); }
};

/// Q_n; 1 <= n <= 15. Always materialized.
[[nodiscard]] Graph build_hypercube(int n);

/// HCN_n with materialized adjacency; 2 <= n <= 7.
[[nodiscard]] Graph build_hcn(int n);

/// HCN_n in adjacency-oracle mode; 2 <= n <= 15.
[[nodiscard]] Graph hcn_oracle(int n);

/// build_hcn for n <= 7, hcn_oracle beyond.
[[nodiscard]] Graph hcn_graph(int n);

/// (y, x) if x != y, else (x̄, ȳ).
[[nodiscard]] HcnVertex outside_neighbor(const HcnVertex& v);
[[nodiscard]] VertexIndex outside_neighbor(int n, VertexIndex v);

[[nodiscard]] inline VertexIndex cube_of(int n, VertexIndex v) { return v >> n; }

/// Every crossing edge of HCN_n, as sorted (u < v) pairs.
[[nodiscard]] std::vector<Edge> crossing_edges(int n);

/// Crossing edges between cubes x and y (x != y).
[[nodiscard]] std::vector<Edge> crossing_edges_between(int n, std::uint32_t x, std::uint32_t y);

/// Vertex set of the Q_g described by `spec`. Throws std::invalid_argument on a bad spec.
[[nodiscard]] VertexSet embed_subcube(int n, const SubcubeSpec& spec);

/// Cube 0...0, free positions = lowest g indices, fixed bits zero.
[[nodiscard]] SubcubeSpec canonical_subcube(int n, int g);

/// `# <origin> n=<n> vertices=<V> edges=<E>` followed by sorted `u v` lines.
/// With `labels`, HCN lines get a trailing `# (x,y) (x,y)` comment.
void export_edge_list(const Graph& g, std::ostream& out, bool labels = false);

/// Inverse of export_edge_list. Throws std::runtime_error on malformed input.
[[nodiscard]] Graph import_edge_list(std::istream& in);

}  // namespace hcndiag
