#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hcndiag/budget.hpp"
#include "hcndiag/graph.hpp"

namespace hcndiag {

/// ⋃ N(v) over v in s, minus s. Throws std::out_of_range for foreign vertices.
[[nodiscard]] VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
[[nodiscard]] VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// |N(u) ∩ N(v)|. Throws std::invalid_argument if u == v.
[[nodiscard]] std::size_t common_neighbor_count(const Graph& g, VertexIndex u, VertexIndex v);

[[nodiscard]] bool is_triangle_free(const Graph& g);

/// Every vertex outside `f` keeps at least g neighbors outside `f`.
/// Local check: only vertices adjacent to `f` can lose neighbors.
[[nodiscard]] bool is_g_good_neighbor_set(const Graph& g, const FaultSet& f, int min_good);

/// Minimum degree of G[s]; nullopt for the empty set.
[[nodiscard]] std::optional<std::size_t> induced_min_degree(const Graph& g, const VertexSet& s);

/// Number of connected components of G - removed.
[[nodiscard]] std::size_t components_after_removal(const Graph& g, const VertexSet& removed);

/// G - f has at least two components and minimum degree >= g. An empty
/// survivor set counts as not disconnected.
[[nodiscard]] bool is_rg_cut(const Graph& g, const FaultSet& f, int min_good);

/// 2^g (n + 1 - g), for 0 <= g <= n - 1.
[[nodiscard]] std::uint64_t kappa_formula(int n, int g);

enum class CutKind { formula, certificate, exact };

[[nodiscard]] std::string_view to_string(CutKind k);

struct CutReport {
  CutKind kind = CutKind::formula;
  int g = 0;
  /// formula: the closed form. certificate: witness size (an upper bound on κ^g).
  /// exact/complete: κ^g, or the vertex count when no R^g-cut exists.
  /// exact/exceeded: lower bound (every smaller cardinality was refuted).
  std::uint64_t value = 0;
  std::optional<VertexSet> witness;
  BudgetState budget_state = BudgetState::complete;
};

[[nodiscard]] CutReport kappa_formula_report(int n, int g);

/// N(X) for the canonical Q_g inside cube 0 (for g = 0, N of vertex 0),
/// verified to be an R^g-cut of size 2^g(n+1-g). Throws std::logic_error if the
/// verification fails.
[[nodiscard]] CutReport kappa_certificate(const Graph& hcn, int g);

/// Exact κ^g. g = 0 uses pairwise max-flow (Menger); g >= 1 enumerates
/// candidate cuts by increasing cardinality (at most 64 vertices), returning
/// the lexicographically smallest minimum cut.
[[nodiscard]] CutReport kappa_exact(const Graph& g, int min_good, Budget& budget);

/// Vertex connectivity κ(G) and a minimum separator (nullopt for complete graphs).
/// If the budget runs out the result is the best separator found, an upper bound.
struct ConnectivityResult {
  std::size_t value = 0;
  std::optional<VertexSet> separator;
};
[[nodiscard]] ConnectivityResult vertex_connectivity(const Graph& g, Budget& budget);

}  // namespace hcndiag
