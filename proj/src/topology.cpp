#include "hcndiag/topology.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hcndiag {

namespace {

void check_dimension(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(n) +
                                " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

std::uint32_t low_mask(int n) { return (std::uint32_t{1} << n) - 1; }

}  // namespace

BitString::BitString(std::uint32_t bits, int width) : bits_(bits), width_(width) {
  if (width < 1 || width > kMaxDimension) throw std::invalid_argument("BitString: bad width");
  if (bits > low_mask(width)) throw std::invalid_argument("BitString: bits exceed width");
}

BitString BitString::complement() const { return BitString(~bits_ & low_mask(width_), width_); }

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(width_ - 1 - i)] = '1';
  }
  return s;
}

VertexIndex HcnVertex::encode() const {
  if (x.width() != y.width()) throw std::invalid_argument("HcnVertex: width mismatch");
  return (x.bits() << x.width()) | y.bits();
}

HcnVertex HcnVertex::decode(int n, VertexIndex id) {
  check_dimension(n, 1, kMaxDimension, "HcnVertex::decode");
  if (id >> (2 * n) != 0) throw std::invalid_argument("HcnVertex::decode: id out of range");
  return {BitString(id >> n, n), BitString(id & low_mask(n), n)};
}

std::string HcnVertex::to_string() const { return "(" + x.to_string() + "," + y.to_string() + ")"; }

Graph build_hypercube(int n) {
  check_dimension(n, 1, kMaxDimension, "build_hypercube");
  const VertexIndex count = VertexIndex{1} << n;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * count / 2);
  for (VertexIndex u = 0; u < count; ++u) {
    for (int d = 0; d < n; ++d) {
      const VertexIndex w = u ^ (VertexIndex{1} << d);
      if (u < w) edges.push_back({u, w});
    }
  }
  return Graph::from_edges(count, edges, Origin::hypercube, n);
}

Graph build_hcn(int n) {
  check_dimension(n, 2, kMaxMaterializedHcn, "build_hcn");
  const VertexIndex count = VertexIndex{1} << (2 * n);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n + 1) * count / 2);
  for (VertexIndex u = 0; u < count; ++u) {
    for (int d = 0; d < n; ++d) {
      const VertexIndex w = u ^ (VertexIndex{1} << d);
      if (u < w) edges.push_back({u, w});
    }
    const VertexIndex w = outside_neighbor(n, u);
    if (u < w) edges.push_back({u, w});
  }
  return Graph::from_edges(count, edges, Origin::hcn, n);
}

Graph hcn_oracle(int n) {
  check_dimension(n, 2, kMaxDimension, "hcn_oracle");
  return Graph::implicit(Origin::hcn, n);
}

Graph hcn_graph(int n) { return n <= kMaxMaterializedHcn ? build_hcn(n) : hcn_oracle(n); }

HcnVertex outside_neighbor(const HcnVertex& v) {
  if (v.x != v.y) return {v.y, v.x};
  return {v.x.complement(), v.y.complement()};
}

VertexIndex outside_neighbor(int n, VertexIndex v) {
  return outside_neighbor(HcnVertex::decode(n, v)).encode();
}

std::vector<Edge> crossing_edges(int n) {
  check_dimension(n, 2, kMaxDimension, "crossing_edges");
  const VertexIndex count = VertexIndex{1} << (2 * n);
  std::vector<Edge> out;
  out.reserve(count / 2);
  for (VertexIndex u = 0; u < count; ++u) {
    const VertexIndex w = outside_neighbor(n, u);
    if (u < w) out.push_back({u, w});
  }
  return out;
}

std::vector<Edge> crossing_edges_between(int n, std::uint32_t x, std::uint32_t y) {
  check_dimension(n, 2, kMaxDimension, "crossing_edges_between");
  if (x == y || x > low_mask(n) || y > low_mask(n)) {
    throw std::invalid_argument("crossing_edges_between: need two distinct valid cube addresses");
  }
  std::vector<Edge> out;
  for (VertexIndex pos = 0; pos <= low_mask(n); ++pos) {
    const VertexIndex u = (x << n) | pos;
    const VertexIndex w = outside_neighbor(n, u);
    if ((w >> n) == y) out.push_back({std::min(u, w), std::max(u, w)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet embed_subcube(int n, const SubcubeSpec& spec) {
  check_dimension(n, 1, kMaxDimension, "embed_subcube");
  if (spec.cube.width() != n) throw std::invalid_argument("embed_subcube: cube width != n");
  std::uint32_t free_mask = 0;
  for (int p : spec.free_positions) {
    if (p < 0 || p >= n) throw std::invalid_argument("embed_subcube: free position out of range");
    if ((free_mask >> p) & 1U) throw std::invalid_argument("embed_subcube: repeated free position");
    free_mask |= std::uint32_t{1} << p;
  }
  if (spec.fixed_bits > low_mask(n) || (spec.fixed_bits & free_mask) != 0) {
    throw std::invalid_argument("embed_subcube: fixed bits overlap free positions or exceed width");
  }
  std::vector<VertexIndex> out;
  // Enumerate every submask of free_mask.
  std::uint32_t sub = 0;
  do {
    out.push_back((spec.cube.bits() << n) | spec.fixed_bits | sub);
    sub = (sub - free_mask) & free_mask;
  } while (sub != 0);
  return VertexSet(std::move(out));
}

SubcubeSpec canonical_subcube(int n, int g) {
  if (g < 0 || g > n) throw std::invalid_argument("canonical_subcube: need 0 <= g <= n");
  SubcubeSpec spec{BitString(0, n), {}, 0};
  for (int i = 0; i < g; ++i) spec.free_positions.push_back(i);
  return spec;
}

void export_edge_list(const Graph& g, std::ostream& out, bool labels) {
  if (!g.materialized()) throw std::invalid_argument("export_edge_list: graph is not materialized");
  const auto edges = g.edges();
  out << "# " << to_string(g.origin()) << " n=" << g.dimension() << " vertices=" << g.vertex_count()
      << " edges=" << edges.size() << '\n';
  const bool decorate = labels && g.origin() == Origin::hcn;
  for (const auto& e : edges) {
    out << e.u << ' ' << e.v;
    if (decorate) {
      out << " # " << HcnVertex::decode(g.dimension(), e.u).to_string() << ' '
          << HcnVertex::decode(g.dimension(), e.v).to_string();
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("export_edge_list: write failed");
}

Graph import_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("edge list: missing header");
  std::istringstream header(line);
  std::string hash, origin_name, n_field, v_field, e_field;
  header >> hash >> origin_name >> n_field >> v_field >> e_field;
  auto field = [](const std::string& tok, const std::string& key) -> std::size_t {
    if (tok.rfind(key + "=", 0) != 0) throw std::runtime_error("edge list: bad header field " + tok);
    return std::stoull(tok.substr(key.size() + 1));
  };
  if (hash != "#") throw std::runtime_error("edge list: header must start with '#'");
  Origin origin = Origin::custom;
  if (origin_name == "hcn") origin = Origin::hcn;
  else if (origin_name == "hypercube") origin = Origin::hypercube;
  else if (origin_name != "custom") throw std::runtime_error("edge list: unknown origin " + origin_name);
  const auto n = static_cast<int>(field(n_field, "n"));
  const auto vertices = field(v_field, "vertices");
  const auto edge_total = field(e_field, "edges");

  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (auto hash_pos = line.find('#'); hash_pos != std::string::npos) line.erase(hash_pos);
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u)) continue;
    if (!(row >> v) || u < 0 || v < 0) throw std::runtime_error("edge list: malformed line");
    edges.push_back({static_cast<VertexIndex>(u), static_cast<VertexIndex>(v)});
  }
  if (edges.size() != edge_total) throw std::runtime_error("edge list: edge count mismatch");
  try {
    return Graph::from_edges(vertices, edges, origin, n);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

}  // namespace hcndiag
