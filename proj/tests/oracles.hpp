#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain adjacency lists and strings and share no algorithm code with the
// library paths they check.

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hcndiag/graph.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;

inline std::string bits(unsigned value, int width) {
  std::string s;
  for (int i = width - 1; i >= 0; --i) s += ((value >> i) & 1U) ? '1' : '0';
  return s;
}

inline std::string complement(std::string s) {
  for (auto& c : s) c = c == '0' ? '1' : '0';
  return s;
}

inline int hamming(const std::string& a, const std::string& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

/// HCN_n edge set written straight from the construction rule on (x, y) strings.
/// Vertex id = value(x) * 2^n + value(y).
inline std::set<std::pair<int, int>> literal_hcn_edges(int n) {
  const int side = 1 << n;
  auto id = [&](const std::string& x, const std::string& y) {
    return std::stoi(x, nullptr, 2) * side + std::stoi(y, nullptr, 2);
  };
  std::set<std::pair<int, int>> edges;
  auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (int xv = 0; xv < side; ++xv) {
    for (int yv = 0; yv < side; ++yv) {
      const auto x = bits(static_cast<unsigned>(xv), n);
      const auto y = bits(static_cast<unsigned>(yv), n);
      for (int y2 = 0; y2 < side; ++y2) {
        if (hamming(y, bits(static_cast<unsigned>(y2), n)) == 1) add(id(x, y), id(x, bits(static_cast<unsigned>(y2), n)));
      }
      if (x != y) add(id(x, y), id(y, x));
      else add(id(x, y), id(complement(x), complement(y)));
    }
  }
  return edges;
}

inline Adjacency adjacency_of(const hcndiag::Graph& g) {
  Adjacency adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(static_cast<int>(e.v));
    adj[e.v].push_back(static_cast<int>(e.u));
  }
  return adj;
}

/// Components of G - removed by repeated DFS over adjacency lists.
inline int components_without(const Adjacency& adj, std::uint64_t removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> seen(adj.size(), false);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || ((removed >> s) & 1U)) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w] && !((removed >> w) & 1U)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

inline bool good(const Adjacency& adj, std::uint64_t f, int g) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if ((f >> v) & 1U) continue;
    int kept = 0;
    for (int w : adj[v]) kept += ((f >> w) & 1U) ? 0 : 1;
    if (kept < g) return false;
  }
  return true;
}

/// κ^g by scanning every subset (<= 20 vertices); -1 if no R^g-cut exists.
inline int brute_kappa(const Adjacency& adj, int g) {
  const int n = static_cast<int>(adj.size());
  int best = -1;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
    const int size = std::popcount(f);
    if (best != -1 && size >= best) continue;
    if (size >= n) continue;
    if (good(adj, f, g) && components_without(adj, f) >= 2) best = size;
  }
  return best;
}

enum class Model { pmc, mm };

/// Whether F1 and F2 admit a common syndrome, decided from the test rules
/// alone: each test result is pinned by every set under which its unit is
/// fault-free, and the sets share a syndrome iff no test is pinned two ways.
inline bool share_syndrome(const Adjacency& adj, std::uint64_t f1, std::uint64_t f2, Model m) {
  auto in = [](std::uint64_t f, int v) { return ((f >> v) & 1U) != 0; };
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u) {
    if (in(f1, u) || in(f2, u)) continue;  // unit faulty under some set: free under it
    if (m == Model::pmc) {
      for (int v : adj[u]) {
        if (in(f1, v) != in(f2, v)) return false;
      }
    } else {
      for (std::size_t i = 0; i < adj[u].size(); ++i) {
        for (std::size_t j = i + 1; j < adj[u].size(); ++j) {
          const int a = adj[u][i], b = adj[u][j];
          if ((in(f1, a) || in(f1, b)) != (in(f2, a) || in(f2, b))) return false;
        }
      }
    }
  }
  return true;
}

/// t_g straight from the definition: smallest max(|F1|,|F2|) over distinct
/// proper g-good sets sharing a syndrome, minus one (|V|-1 if none).
inline int brute_tg(const Adjacency& adj, int g, Model m) {
  const int n = static_cast<int>(adj.size());
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> sets;
  for (std::uint64_t f = 0; f < all; ++f) {
    if (good(adj, f, g)) sets.push_back(f);
  }
  int best = n;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const int mx = std::max(std::popcount(sets[i]), std::popcount(sets[j]));
      if (mx < best && share_syndrome(adj, sets[i], sets[j], m)) best = mx;
    }
  }
  return best - 1;
}

inline hcndiag::Graph random_graph(std::mt19937_64& rng, int vertices, double p) {
  std::vector<hcndiag::Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (coin(rng) < p) edges.push_back({static_cast<hcndiag::VertexIndex>(u), static_cast<hcndiag::VertexIndex>(v)});
    }
  }
  return hcndiag::Graph::from_edges(static_cast<std::size_t>(vertices), edges);
}

}  // namespace oracle
