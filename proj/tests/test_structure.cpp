#include <numeric>
#include <random>

#include "doctest.h"
#include "hcndiag/structure.hpp"
#include "hcndiag/topology.hpp"
#include "oracles.hpp"

using namespace hcndiag;

TEST_SUITE("structure") {

TEST_CASE("open_neighborhood") {
  const auto h2 = build_hcn(2);
  CHECK(open_neighborhood(h2, {}).empty());
  // (00,00) -> (00,01), (00,10), (11,11)
  CHECK(open_neighborhood(h2, {0}) == VertexSet{1, 2, 15});
  std::vector<VertexIndex> all(16);
  std::iota(all.begin(), all.end(), 0);
  CHECK(open_neighborhood(h2, VertexSet(all)).empty());
  CHECK(closed_neighborhood(h2, {0}) == VertexSet{0, 1, 2, 15});
  CHECK_THROWS_AS((void)open_neighborhood(h2, {16}), std::out_of_range);
}

TEST_CASE("common_neighbor_count") {
  const auto q3 = build_hypercube(3);
  CHECK(common_neighbor_count(q3, 0b000, 0b011) == 2);
  CHECK(common_neighbor_count(q3, 0b000, 0b111) == 0);
  CHECK_THROWS_AS((void)common_neighbor_count(q3, 1, 1), std::invalid_argument);

  const auto h2 = build_hcn(2);
  CHECK(common_neighbor_count(h2, 0, 1) == 0);  // adjacent: no triangle
  // Q_2 antipodal pair inside one cube: two common neighbors even at n = 2.
  CHECK(common_neighbor_count(h2, 0, 3) == 2);

  for (int n = 2; n <= 3; ++n) {
    const auto g = build_hcn(n);
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
      for (VertexIndex v = u + 1; v < g.vertex_count(); ++v) {
        const auto c = common_neighbor_count(g, u, v);
        REQUIRE(c <= 2);
        if (cube_of(n, u) != cube_of(n, v)) REQUIRE(c <= 1);
      }
    }
  }
}

TEST_CASE("is_triangle_free") {
  for (int n = 2; n <= 5; ++n) CHECK(is_triangle_free(build_hcn(n)));
  CHECK(is_triangle_free(build_hypercube(4)));
  const std::vector<Edge> k3{{0, 1}, {1, 2}, {0, 2}};
  CHECK_FALSE(is_triangle_free(Graph::from_edges(3, k3)));
}

TEST_CASE("is_g_good_neighbor_set") {
  const auto h2 = build_hcn(2);
  for (int g = 0; g <= 3; ++g) CHECK(is_g_good_neighbor_set(h2, {}, g));
  CHECK_FALSE(is_g_good_neighbor_set(h2, {}, 4));
  const VertexSet x{0, 1};
  CHECK(is_g_good_neighbor_set(h2, open_neighborhood(h2, x), 1));
  std::vector<VertexIndex> most(15);
  std::iota(most.begin(), most.end(), 1);
  CHECK_FALSE(is_g_good_neighbor_set(h2, VertexSet(most), 1));
  CHECK(is_g_good_neighbor_set(h2, VertexSet(most), 0));

  // Agrees with a full scan on random sets.
  const auto adj = oracle::adjacency_of(h2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t mask = rng() & 0xFFFF & rng();
    const int g = static_cast<int>(rng() % 4);
    REQUIRE(is_g_good_neighbor_set(h2, VertexSet::from_mask(mask), g) == oracle::good(adj, mask, g));
  }
}

TEST_CASE("is_rg_cut") {
  const auto h2 = build_hcn(2);
  const auto adj = oracle::adjacency_of(h2);
  const auto f = open_neighborhood(h2, {0, 1});
  CHECK(f == VertexSet{2, 3, 4, 15});
  CHECK(oracle::components_without(adj, f.to_mask()) == 2);
  CHECK(is_rg_cut(h2, f, 1));
  CHECK_FALSE(is_rg_cut(h2, f, 2));
  CHECK_FALSE(is_rg_cut(h2, {}, 0));
  for (VertexIndex v = 0; v < 16; ++v) CHECK(is_rg_cut(h2, open_neighborhood(h2, {v}), 0));

  // Monotone downward in g.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto set = VertexSet::from_mask(rng() & rng() & 0xFFFF);
    for (int g = 3; g >= 1; --g) {
      if (is_rg_cut(h2, set, g)) REQUIRE(is_rg_cut(h2, set, g - 1));
    }
  }
}

TEST_CASE("kappa_formula") {
  CHECK(kappa_formula(2, 0) == 3);
  CHECK(kappa_formula(2, 1) == 4);
  CHECK(kappa_formula(4, 3) == 16);
  CHECK_THROWS_AS((void)kappa_formula(4, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)kappa_formula(4, -1), std::invalid_argument);
}

TEST_CASE("kappa_certificate") {
  CHECK(kappa_certificate(build_hcn(3), 1).value == 6);
  CHECK(kappa_certificate(build_hcn(2), 1).value == 4);
  CHECK(kappa_certificate(build_hcn(5), 2).value == 16);
  for (int n = 2; n <= 6; ++n) {
    const auto g = build_hcn(n);
    for (int k = 0; k <= n - 1; ++k) {
      const auto r = kappa_certificate(g, k);
      CHECK(r.kind == CutKind::certificate);
      CHECK(r.value == kappa_formula(n, k));
      REQUIRE(r.witness);
      CHECK(is_rg_cut(g, *r.witness, k));
    }
  }
  CHECK_THROWS_AS((void)kappa_certificate(build_hypercube(3), 1), std::invalid_argument);
}

TEST_CASE("kappa_exact against subset enumeration") {
  const auto h2 = build_hcn(2);
  const auto adj = oracle::adjacency_of(h2);
  CHECK(oracle::brute_kappa(adj, 0) == 3);
  CHECK(oracle::brute_kappa(adj, 1) == 4);

  Budget b0;
  const auto k0 = kappa_exact(h2, 0, b0);
  CHECK(k0.value == 3);
  CHECK(k0.budget_state == BudgetState::complete);
  REQUIRE(k0.witness);
  CHECK(is_rg_cut(h2, *k0.witness, 0));

  Budget b1;
  const auto k1 = kappa_exact(h2, 1, b1);
  CHECK(k1.value == 4);
  REQUIRE(k1.witness);
  CHECK(is_rg_cut(h2, *k1.witness, 1));
  CHECK(*k1.witness == VertexSet{0, 1, 8, 12});  // lexicographically first 4-cut

  Budget bq;
  CHECK(kappa_exact(build_hypercube(3), 0, bq).value == 3);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int vertices = 3 + static_cast<int>(rng() % 7);
    const auto g = oracle::random_graph(rng, vertices, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    const auto a = oracle::adjacency_of(g);
    for (int k = 0; k <= 1; ++k) {
      Budget b;
      const auto r = kappa_exact(g, k, b);
      const int brute = oracle::brute_kappa(a, k);
      REQUIRE(r.value == static_cast<std::uint64_t>(brute == -1 ? vertices : brute));
      if (brute != -1) REQUIRE(is_rg_cut(g, *r.witness, k));
    }
  }
}

TEST_CASE("kappa_exact reports budget exhaustion") {
  Budget tiny(50);
  const auto r = kappa_exact(build_hcn(2), 1, tiny);
  CHECK(r.budget_state == BudgetState::exceeded);
  CHECK(r.value == 2);  // sizes 0 and 1 (17 candidates) fully refuted
  CHECK_FALSE(r.witness);
  Budget b;
  CHECK_THROWS_AS((void)kappa_exact(build_hcn(4), 1, b), std::invalid_argument);
}

TEST_CASE("induced subgraphs of Q_3 with min degree g have at least 2^g vertices") {
  const auto q3 = build_hypercube(3);
  for (std::uint64_t mask = 1; mask < 256; ++mask) {
    const auto d = *induced_min_degree(q3, VertexSet::from_mask(mask));
    REQUIRE(static_cast<std::size_t>(std::popcount(mask)) >= (std::size_t{1} << d));
  }
}

}  // TEST_SUITE
