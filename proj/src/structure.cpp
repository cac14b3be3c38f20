#include "hcndiag/structure.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "hcndiag/detail/small_graph.hpp"
#include "hcndiag/topology.hpp"

namespace hcndiag {

namespace {

void require_members(const Graph& g, const VertexSet& s) {
  if (!s.empty() && !g.contains(s.max_member())) {
    throw std::out_of_range("vertex " + std::to_string(s.max_member()) + " not in graph");
  }
}

}  // namespace

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  require_members(g, s);
  std::vector<VertexIndex> out;
  for (auto v : s) {
    g.for_each_neighbor(v, [&](VertexIndex w) {
      if (!s.contains(w)) out.push_back(w);
    });
  }
  return VertexSet(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  return set_union(open_neighborhood(g, s), s);
}

std::size_t common_neighbor_count(const Graph& g, VertexIndex u, VertexIndex v) {
  if (u == v) throw std::invalid_argument("common_neighbor_count: u == v");
  if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("common_neighbor_count: vertex out of range");
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  std::size_t count = 0;
  auto a = nu.begin();
  auto b = nv.begin();
  while (a != nu.end() && b != nv.end()) {
    if (*a < *b) ++a;
    else if (*b < *a) ++b;
    else { ++count; ++a; ++b; }
  }
  return count;
}

bool is_triangle_free(const Graph& g) {
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (auto v : nu) {
      if (v <= u) continue;
      for (auto w : nu) {
        if (w > v && g.adjacent(v, w)) return false;
      }
    }
  }
  return true;
}

bool is_g_good_neighbor_set(const Graph& g, const FaultSet& f, int min_good) {
  require_members(g, f);
  if (min_good <= 0) return true;
  const auto need = static_cast<std::size_t>(min_good);
  if (f.size() == g.vertex_count()) return true;  // no survivors: vacuous
  // Survivors not adjacent to f keep their full degree.
  if (g.min_degree() < need) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (!f.contains(v) && g.degree(v) < need) {
        std::size_t kept = 0;
        g.for_each_neighbor(v, [&](VertexIndex w) { kept += f.contains(w) ? 0 : 1; });
        if (kept < need) return false;
      }
    }
  }
  for (auto v : open_neighborhood(g, f)) {
    std::size_t kept = 0;
    g.for_each_neighbor(v, [&](VertexIndex w) { kept += f.contains(w) ? 0 : 1; });
    if (kept < need) return false;
  }
  return true;
}

std::optional<std::size_t> induced_min_degree(const Graph& g, const VertexSet& s) {
  require_members(g, s);
  if (s.empty()) return std::nullopt;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (auto v : s) {
    std::size_t d = 0;
    g.for_each_neighbor(v, [&](VertexIndex w) { d += s.contains(w) ? 1 : 0; });
    best = std::min(best, d);
  }
  return best;
}

std::size_t components_after_removal(const Graph& g, const VertexSet& removed) {
  require_members(g, removed);
  std::vector<bool> seen(g.vertex_count(), false);
  for (auto v : removed) seen[v] = true;
  std::size_t components = 0;
  std::vector<VertexIndex> stack;
  for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      g.for_each_neighbor(v, [&](VertexIndex w) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      });
    }
  }
  return components;
}

bool is_rg_cut(const Graph& g, const FaultSet& f, int min_good) {
  require_members(g, f);
  if (f.size() >= g.vertex_count()) return false;
  if (!is_g_good_neighbor_set(g, f, min_good)) return false;
  return components_after_removal(g, f) >= 2;
}

std::uint64_t kappa_formula(int n, int g) {
  if (n < 1 || g < 0 || g > n - 1) {
    throw std::invalid_argument("kappa_formula: need 0 <= g <= n-1");
  }
  return (std::uint64_t{1} << g) * static_cast<std::uint64_t>(n + 1 - g);
}

std::string_view to_string(CutKind k) {
  switch (k) {
    case CutKind::formula: return "formula";
    case CutKind::certificate: return "certificate";
    case CutKind::exact: return "exact";
  }
  return "formula";
}

CutReport kappa_formula_report(int n, int g) {
  return CutReport{CutKind::formula, g, kappa_formula(n, g), std::nullopt, BudgetState::complete};
}

CutReport kappa_certificate(const Graph& hcn, int g) {
  if (hcn.origin() != Origin::hcn) throw std::invalid_argument("kappa_certificate: graph is not HCN_n");
  const int n = hcn.dimension();
  const auto expected = kappa_formula(n, g);
  const VertexSet x = embed_subcube(n, canonical_subcube(n, g));
  VertexSet witness = open_neighborhood(hcn, x);
  if (witness.size() != expected || !is_rg_cut(hcn, witness, g)) {
    throw std::logic_error("kappa_certificate: N(X) failed verification at n=" + std::to_string(n) +
                           " g=" + std::to_string(g));
  }
  return CutReport{CutKind::certificate, g, witness.size(), std::move(witness), BudgetState::complete};
}

namespace {

/// Unit-capacity vertex-split flow network for local vertex connectivity.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : nodes_(2 * g.vertex_count()), head_(nodes_, -1) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      add_arc(in(v), out(v), 1);
      g.for_each_neighbor(v, [&](VertexIndex w) { add_arc(out(v), in(w), kInf); });
    }
    base_cap_ = cap_;
  }

  /// Max number of internally vertex-disjoint s-t paths; leaves residual state for separator().
  std::size_t max_flow(VertexIndex s, VertexIndex t) {
    cap_ = base_cap_;
    const int source = out(s);
    const int sink = in(t);
    std::size_t flow = 0;
    std::vector<int> parent_arc(nodes_);
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> q;
      q.push(source);
      parent_arc[source] = -2;
      while (!q.empty() && parent_arc[sink] == -1) {
        const int u = q.front();
        q.pop();
        for (int a = head_[u]; a != -1; a = next_[a]) {
          if (cap_[a] > 0 && parent_arc[to_[a]] == -1) {
            parent_arc[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (parent_arc[sink] == -1) break;
      for (int v = sink; v != source; v = to_[parent_arc[v] ^ 1]) {
        cap_[parent_arc[v]] -= 1;
        cap_[parent_arc[v] ^ 1] += 1;
      }
      ++flow;
    }
    reachable_.assign(nodes_, false);
    std::vector<int> stack{source};
    reachable_[source] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && !reachable_[to_[a]]) {
          reachable_[to_[a]] = true;
          stack.push_back(to_[a]);
        }
      }
    }
    return flow;
  }

  /// Vertices whose split arc crosses the last computed min cut.
  VertexSet separator() const {
    std::vector<VertexIndex> out_set;
    for (int v = 0; v < nodes_ / 2; ++v) {
      if (reachable_[in(v)] && !reachable_[out(v)]) out_set.push_back(static_cast<VertexIndex>(v));
    }
    return VertexSet(std::move(out_set));
  }

 private:
  static constexpr int kInf = 1 << 29;
  static int in(VertexIndex v) { return 2 * static_cast<int>(v); }
  static int out(VertexIndex v) { return 2 * static_cast<int>(v) + 1; }
  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  void add_arc(int from, int to, int cap) {
    to_.push_back(to); cap_.push_back(cap); next_.push_back(head_[from]); head_[from] = static_cast<int>(to_.size()) - 1;
    to_.push_back(from); cap_.push_back(0); next_.push_back(head_[to]); head_[to] = static_cast<int>(to_.size()) - 1;
  }

  int nodes_;
  std::vector<int> head_;
  std::vector<int> to_, cap_, next_, base_cap_;
  std::vector<bool> reachable_;
};

}  // namespace

ConnectivityResult vertex_connectivity(const Graph& g, Budget& budget) {
  const auto count = static_cast<VertexIndex>(g.vertex_count());
  ConnectivityResult best{count == 0 ? 0 : count - 1, std::nullopt};
  // The neighborhood of a minimum-degree vertex separates unless the graph is complete.
  for (VertexIndex v = 0; v < count; ++v) {
    if (g.degree(v) + 1 < count && g.degree(v) < best.value + (best.separator ? 0 : 1)) {
      best = {g.degree(v), open_neighborhood(g, VertexSet{v})};
    }
  }
  if (!best.separator) return best;

  // A minimum separator misses one of the first best.value + 1 vertices, so
  // only those need to act as sources. Each flow is charged its network size.
  SplitNetwork net(g);
  for (VertexIndex s = 0; s < count && s <= best.value; ++s) {
    for (VertexIndex t = s + 1; t < count; ++t) {
      if (g.adjacent(s, t)) continue;
      if (!budget.charge(2 * std::uint64_t{count})) return best;
      const auto flow = net.max_flow(s, t);
      if (flow < best.value) {
        best.value = flow;
        best.separator = net.separator();
        if (flow == 0) return best;
      }
    }
  }
  return best;
}

CutReport kappa_exact(const Graph& g, int min_good, Budget& budget) {
  if (min_good < 0) throw std::invalid_argument("kappa_exact: g must be >= 0");
  CutReport report{CutKind::exact, min_good, 0, std::nullopt, BudgetState::complete};
  if (min_good == 0) {
    auto conn = vertex_connectivity(g, budget);
    report.budget_state = budget.state();
    if (!conn.separator) {
      report.value = g.vertex_count();  // complete graph: no separator
    } else {
      report.value = conn.value;
      report.witness = std::move(conn.separator);
    }
    return report;
  }

  const detail::SmallGraph sg(g);
  const int count = sg.vertex_count;
  for (int k = 0; k + 2 <= count; ++k) {
    std::optional<std::uint64_t> found;
    const bool finished = detail::for_each_combination(count, k, [&](std::uint64_t f) {
      if (!budget.charge()) return false;
      const std::uint64_t survivors = sg.all & ~f;
      if (!sg.g_good(f, min_good)) return true;
      if (sg.component_of_lowest(survivors) == survivors) return true;
      found = f;
      return false;
    });
    if (found) {
      report.value = static_cast<std::uint64_t>(k);
      report.witness = VertexSet::from_mask(*found);
      return report;
    }
    if (!finished) {
      report.value = static_cast<std::uint64_t>(k);
      report.budget_state = BudgetState::exceeded;
      return report;
    }
  }
  report.value = g.vertex_count();
  return report;
}

}  // namespace hcndiag
