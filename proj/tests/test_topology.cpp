#include <map>
#include <sstream>

#include "doctest.h"
#include "hcndiag/structure.hpp"
#include "hcndiag/topology.hpp"
#include "oracles.hpp"

using namespace hcndiag;

TEST_SUITE("topology") {

TEST_CASE("bit strings and vertex encoding") {
  const BitString b(0b0110, 4);
  CHECK(b.to_string() == "0110");
  CHECK(b.complement().to_string() == "1001");
  CHECK(b.complement().complement() == b);
  CHECK_THROWS_AS(BitString(16, 4), std::invalid_argument);

  for (VertexIndex id = 0; id < 64; ++id) {
    const auto v = HcnVertex::decode(3, id);
    CHECK(v.encode() == id);
    CHECK(v.x.bits() * 8 + v.y.bits() == id);
  }
  CHECK(HcnVertex::decode(2, 1).to_string() == "(00,01)");
  CHECK_THROWS_AS((void)HcnVertex::decode(2, 16), std::invalid_argument);
}

TEST_CASE("build_hypercube") {
  const auto q1 = build_hypercube(1);
  CHECK(q1.vertex_count() == 2);
  CHECK(q1.edge_count() == 1);

  // n * 2^(n-1) edges, counted by scanning all pairs.
  const auto q3 = build_hypercube(3);
  int pairs = 0;
  for (VertexIndex u = 0; u < 8; ++u)
    for (VertexIndex v = u + 1; v < 8; ++v) pairs += std::popcount(u ^ v) == 1 ? 1 : 0;
  CHECK(pairs == 12);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  CHECK(q3.min_degree() == 3);
  CHECK(q3.max_degree() == 3);

  const auto q2 = build_hypercube(2);
  CHECK(q2.adjacent(0b00, 0b01));
  CHECK(q2.adjacent(0b01, 0b11));
  CHECK(q2.adjacent(0b11, 0b10));
  CHECK(q2.adjacent(0b10, 0b00));
  CHECK_FALSE(q2.adjacent(0b00, 0b11));

  CHECK_THROWS_AS((void)build_hypercube(0), std::invalid_argument);
  CHECK_THROWS_AS((void)build_hypercube(16), std::invalid_argument);
}

TEST_CASE("outside_neighbor") {
  const HcnVertex a{BitString(0b00, 2), BitString(0b01, 2)};
  CHECK(outside_neighbor(a) == HcnVertex{BitString(0b01, 2), BitString(0b00, 2)});
  const HcnVertex b{BitString(0b00, 2), BitString(0b00, 2)};
  CHECK(outside_neighbor(b) == HcnVertex{BitString(0b11, 2), BitString(0b11, 2)});

  for (int n = 2; n <= 6; ++n) {
    for (VertexIndex v = 0; v < (VertexIndex{1} << (2 * n)); ++v) {
      const auto w = outside_neighbor(n, v);
      REQUIRE(w != v);
      REQUIRE(cube_of(n, w) != cube_of(n, v));
      REQUIRE(outside_neighbor(n, w) == v);
    }
  }
}

TEST_CASE("build_hcn matches the construction rule") {
  for (int n = 2; n <= 4; ++n) {
    const auto g = build_hcn(n);
    const auto literal = oracle::literal_hcn_edges(n);
    std::set<std::pair<int, int>> built;
    for (const auto& e : g.edges()) built.insert({static_cast<int>(e.u), static_cast<int>(e.v)});
    CHECK(built == literal);
  }
  const auto h2 = build_hcn(2);
  CHECK(h2.vertex_count() == 16);
  CHECK(h2.edge_count() == 24);  // 4 cubes x 4 edges + 8 crossing edges
  CHECK(h2.origin() == Origin::hcn);
  const auto h3 = build_hcn(3);
  CHECK(h3.vertex_count() == 64);
  CHECK(h3.min_degree() == 4);
  CHECK(h3.max_degree() == 4);
  CHECK_THROWS_AS((void)build_hcn(1), std::invalid_argument);
  CHECK_THROWS_AS((void)build_hcn(8), std::invalid_argument);
}

TEST_CASE("every vertex has exactly one outside neighbor") {
  for (int n = 2; n <= 5; ++n) {
    const auto g = build_hcn(n);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      int outside = 0;
      g.for_each_neighbor(v, [&](VertexIndex w) { outside += cube_of(n, w) != cube_of(n, v) ? 1 : 0; });
      REQUIRE(outside == 1);
    }
  }
}

TEST_CASE("crossing edges") {
  const auto between_complements = crossing_edges_between(2, 0b00, 0b11);
  // {(00,11),(11,00)} = {3,12} and {(00,00),(11,11)} = {0,15}
  CHECK(between_complements == std::vector<Edge>{{0, 15}, {3, 12}});
  CHECK(crossing_edges_between(2, 0b00, 0b01).size() == 1);
  CHECK_THROWS_AS((void)crossing_edges_between(2, 1, 1), std::invalid_argument);

  for (int n = 2; n <= 5; ++n) {
    const auto edges = crossing_edges(n);
    CHECK(edges.size() == (std::size_t{1} << (2 * n - 1)));
    std::set<VertexIndex> touched;
    for (const auto& e : edges) {
      touched.insert(e.u);
      touched.insert(e.v);
    }
    CHECK(touched.size() == (std::size_t{1} << (2 * n)));  // perfect matching

    std::map<std::pair<VertexIndex, VertexIndex>, int> per_pair;
    for (const auto& e : edges) {
      auto a = cube_of(n, e.u), b = cube_of(n, e.v);
      per_pair[{std::min(a, b), std::max(a, b)}]++;
    }
    const VertexIndex mask = (VertexIndex{1} << n) - 1;
    CHECK(per_pair.size() == (std::size_t{1} << n) * ((std::size_t{1} << n) - 1) / 2);
    for (const auto& [cubes, count] : per_pair) {
      CHECK(count == ((cubes.first ^ cubes.second) == mask ? 2 : 1));
    }
  }
}

TEST_CASE("embed_subcube") {
  const auto x = embed_subcube(2, SubcubeSpec{BitString(0, 2), {0}, 0});
  CHECK(x == VertexSet{0, 1});
  const auto h2 = build_hcn(2);
  CHECK(h2.adjacent(0, 1));

  const auto h3 = build_hcn(3);
  const auto c4 = embed_subcube(3, canonical_subcube(3, 2));
  CHECK(c4.size() == 4);
  CHECK(induced_min_degree(h3, c4) == 2);
  int edges = 0;
  for (auto u : c4)
    for (auto v : c4) edges += (u < v && h3.adjacent(u, v)) ? 1 : 0;
  CHECK(edges == 4);

  CHECK(embed_subcube(3, canonical_subcube(3, 0)).size() == 1);

  CHECK_THROWS_AS((void)embed_subcube(3, SubcubeSpec{BitString(0, 3), {0, 0}, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)embed_subcube(3, SubcubeSpec{BitString(0, 3), {3}, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)embed_subcube(3, SubcubeSpec{BitString(0, 3), {0}, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)embed_subcube(3, SubcubeSpec{BitString(0, 2), {0}, 0}), std::invalid_argument);

  // Any spec induces a g-regular bipartite subgraph on 2^g vertices.
  const auto h4 = build_hcn(4);
  for (std::uint32_t free = 0; free < 16; ++free) {
    SubcubeSpec spec{BitString(free ^ 5, 4), {}, 0b1111 & ~free & 0b1010};
    for (int p = 0; p < 4; ++p)
      if ((free >> p) & 1U) spec.free_positions.push_back(p);
    const auto set = embed_subcube(4, spec);
    const int g = std::popcount(free);
    REQUIRE(set.size() == (std::size_t{1} << g));
    if (g > 0) REQUIRE(induced_min_degree(h4, set) == static_cast<std::size_t>(g));
    for (auto u : set)
      for (auto v : set)
        if (h4.adjacent(u, v)) REQUIRE(std::popcount(u ^ v) % 2 == 1);
  }
}

TEST_CASE("oracle mode agrees with materialized adjacency") {
  for (int n = 2; n <= 5; ++n) {
    const auto full = build_hcn(n);
    const auto lazy = hcn_oracle(n);
    CHECK_FALSE(lazy.materialized());
    CHECK(lazy.edge_count() == full.edge_count());
    for (VertexIndex v = 0; v < full.vertex_count(); ++v) {
      REQUIRE(lazy.neighbors(v) == full.neighbors(v));
      for (auto w : full.neighbors(v)) REQUIRE(lazy.adjacent(v, w));
      REQUIRE_FALSE(lazy.adjacent(v, v));
    }
  }
  CHECK(hcn_oracle(15).vertex_count() == (std::size_t{1} << 30));
  CHECK(hcn_oracle(15).degree(12345) == 16);
}

TEST_CASE("edge list export and import") {
  std::ostringstream q1;
  export_edge_list(build_hypercube(1), q1);
  CHECK(q1.str() == "# hypercube n=1 vertices=2 edges=1\n0 1\n");

  const auto h2 = build_hcn(2);
  std::ostringstream out;
  export_edge_list(h2, out);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# hcn n=2 vertices=16 edges=24");
  int body = 0;
  std::vector<std::pair<int, int>> rows;
  while (std::getline(lines, line)) {
    std::istringstream r(line);
    int u = 0, v = 0;
    r >> u >> v;
    CHECK(u < v);
    rows.emplace_back(u, v);
    ++body;
  }
  CHECK(body == 24);
  CHECK(std::is_sorted(rows.begin(), rows.end()));

  std::istringstream back(out.str());
  CHECK(import_edge_list(back) == h2);

  std::ostringstream labeled;
  export_edge_list(h2, labeled, true);
  CHECK(labeled.str().find("0 1 # (00,00) (00,01)") != std::string::npos);
  std::istringstream labeled_back(labeled.str());
  CHECK(import_edge_list(labeled_back) == h2);

  std::istringstream bad("# hcn n=2 vertices=16 edges=2\n0 1\n");
  CHECK_THROWS_AS((void)import_edge_list(bad), std::runtime_error);
  std::istringstream loop("# custom n=0 vertices=3 edges=1\n1 1\n");
  CHECK_THROWS_AS((void)import_edge_list(loop), std::runtime_error);
  CHECK_THROWS_AS((void)export_edge_list(hcn_oracle(8), out), std::invalid_argument);
}

}  // TEST_SUITE
