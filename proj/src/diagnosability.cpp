#include "hcndiag/diagnosability.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "hcndiag/detail/small_graph.hpp"
#include "hcndiag/structure.hpp"
#include "hcndiag/topology.hpp"

namespace hcndiag {

std::string_view to_string(DiagModel m) { return m == DiagModel::pmc ? "pmc" : "mm"; }

std::optional<DiagModel> parse_model(std::string_view s) {
  if (s == "pmc") return DiagModel::pmc;
  if (s == "mm" || s == "mm*" || s == "mmstar") return DiagModel::mm_star;
  return std::nullopt;
}

std::string_view to_string(SearchStrategy s) {
  return s == SearchStrategy::structured ? "structured" : "pair_enumeration";
}

std::string_view to_string(DiagMode m) {
  switch (m) {
    case DiagMode::formula: return "formula";
    case DiagMode::certificate: return "certificate";
    case DiagMode::exact: return "exact";
    case DiagMode::oracle: return "oracle";
  }
  return "formula";
}

std::optional<DiagMode> parse_mode(std::string_view s) {
  if (s == "formula") return DiagMode::formula;
  if (s == "certificate") return DiagMode::certificate;
  if (s == "exact") return DiagMode::exact;
  if (s == "oracle") return DiagMode::oracle;
  return std::nullopt;
}

FaultPair::FaultPair(FaultSet f1, FaultSet f2)
    : f1_(std::move(f1)), f2_(std::move(f2)), sym_diff_(symmetric_difference(f1_, f2_)) {
  if (f1_ == f2_) throw std::invalid_argument("FaultPair: sets must be distinct");
}

FaultPair FaultPair::canonical() const {
  if (canonical_less(f2_, f1_)) return FaultPair(f2_, f1_);
  return *this;
}

bool pmc_distinguishable(const Graph& g, const FaultPair& p) {
  for (auto v : p.sym_diff()) {
    bool found = false;
    g.for_each_neighbor(v, [&](VertexIndex w) {
      if (!p.f1().contains(w) && !p.f2().contains(w)) found = true;
    });
    if (found) return true;
  }
  return false;
}

namespace {

bool has_shared_fault_free_comparator(const Graph& g, const VertexSet& side, const FaultPair& p) {
  std::vector<VertexIndex> comparators;
  for (auto v : side) {
    g.for_each_neighbor(v, [&](VertexIndex w) {
      if (!p.f1().contains(w) && !p.f2().contains(w)) comparators.push_back(w);
    });
  }
  std::sort(comparators.begin(), comparators.end());
  return std::adjacent_find(comparators.begin(), comparators.end()) != comparators.end();
}

}  // namespace

MmCondition mm_condition(const Graph& g, const FaultPair& p) {
  auto fault_free = [&](VertexIndex w) { return !p.f1().contains(w) && !p.f2().contains(w); };
  for (auto v : p.sym_diff()) {
    bool found = false;
    g.for_each_neighbor(v, [&](VertexIndex w) {
      if (found || !fault_free(w)) return;
      g.for_each_neighbor(w, [&](VertexIndex u) { found = found || fault_free(u); });
    });
    if (found) return MmCondition::outside_comparator;
  }
  if (has_shared_fault_free_comparator(g, set_difference(p.f1(), p.f2()), p)) {
    return MmCondition::first_only_pair;
  }
  if (has_shared_fault_free_comparator(g, set_difference(p.f2(), p.f1()), p)) {
    return MmCondition::second_only_pair;
  }
  return MmCondition::none;
}

bool mm_distinguishable(const Graph& g, const FaultPair& p) {
  return mm_condition(g, p) != MmCondition::none;
}

bool distinguishable(const Graph& g, const FaultPair& p, DiagModel m) {
  return m == DiagModel::pmc ? pmc_distinguishable(g, p) : mm_distinguishable(g, p);
}

bool mm_distinguishable_implies_pmc(const Graph& g, const FaultPair& p) {
  return mm_condition(g, p) != MmCondition::outside_comparator || pmc_distinguishable(g, p);
}

std::uint64_t tg_formula(int n, int g) {
  if (n < 2 || g < 1 || g > n - 1) throw std::invalid_argument("tg_formula: need n >= 2, 1 <= g <= n-1");
  return (std::uint64_t{1} << g) * static_cast<std::uint64_t>(n + 2 - g) - 1;
}

FaultPair extremal_pair(const Graph& hcn, int g) {
  if (hcn.origin() != Origin::hcn) throw std::invalid_argument("extremal_pair: graph is not HCN_n");
  const int n = hcn.dimension();
  if (g < 1 || g > n - 1) throw std::invalid_argument("extremal_pair: need 1 <= g <= n-1");
  const VertexSet x = embed_subcube(n, canonical_subcube(n, g));
  VertexSet f1 = open_neighborhood(hcn, x);
  VertexSet f2 = set_union(f1, x);
  return FaultPair(std::move(f1), std::move(f2));
}

namespace {

using detail::SmallGraph;

struct PairKey {
  int max_size = 0;
  int sum_size = 0;
  std::uint64_t f1 = 0;
  std::uint64_t f2 = 0;

  static PairKey of(std::uint64_t a, std::uint64_t b) {
    if (detail::canonical_less(b, a)) std::swap(a, b);
    const int pa = std::popcount(a), pb = std::popcount(b);
    return {std::max(pa, pb), pa + pb, a, b};
  }

  friend bool operator<(const PairKey& x, const PairKey& y) {
    if (x.max_size != y.max_size) return x.max_size < y.max_size;
    if (x.sum_size != y.sum_size) return x.sum_size < y.sum_size;
    if (x.f1 != y.f1) return detail::lex_less(x.f1, y.f1);
    return detail::lex_less(x.f2, y.f2);
  }
};

bool pmc_indistinguishable(const SmallGraph& sg, std::uint64_t f1, std::uint64_t f2) {
  const std::uint64_t outside = sg.all & ~(f1 | f2);
  return (sg.neighbor_union(f1 ^ f2) & outside) == 0;
}

bool mm_indistinguishable(const SmallGraph& sg, std::uint64_t f1, std::uint64_t f2) {
  const std::uint64_t outside = sg.all & ~(f1 | f2);
  const std::uint64_t only1 = f1 & ~f2;
  const std::uint64_t only2 = f2 & ~f1;
  for (std::uint64_t c = sg.neighbor_union(f1 ^ f2) & outside; c != 0; c &= c - 1) {
    const std::uint64_t nw = sg.nbr[static_cast<std::size_t>(std::countr_zero(c))];
    if ((nw & outside) != 0) return false;
    if (std::popcount(nw & only1) >= 2 || std::popcount(nw & only2) >= 2) return false;
  }
  return true;
}

bool indistinguishable(const SmallGraph& sg, DiagModel m, std::uint64_t f1, std::uint64_t f2) {
  return m == DiagModel::pmc ? pmc_indistinguishable(sg, f1, f2) : mm_indistinguishable(sg, f1, f2);
}

enum class LevelOutcome { none, found, exceeded };

/// Plain enumeration of faulty-set pairs, one level (max size) at a time.
class PairEnumeration {
 public:
  PairEnumeration(const SmallGraph& sg, int g, DiagModel model, unsigned threads)
      : sg_(sg), g_(g), model_(model), threads_(std::max(1U, threads)) {
    if (sg_.faulty_set(0, g_)) below_.push_back(0);
  }

  LevelOutcome run_level(int m, Budget& budget, PairKey& best) {
    if (!budget.charge(detail::binomial(sg_.vertex_count, m))) return LevelOutcome::exceeded;
    std::vector<std::uint64_t> level;
    detail::for_each_combination(sg_.vertex_count, m, [&](std::uint64_t f) {
      if (sg_.faulty_set(f, g_)) level.push_back(f);
      return true;
    });
    const std::uint64_t l = level.size();
    if (!budget.charge(l * below_.size() + l * (l - (l > 0 ? 1 : 0)) / 2)) return LevelOutcome::exceeded;

    std::vector<std::optional<PairKey>> per_thread(threads_);
    auto worker = [&](unsigned tid) {
      std::optional<PairKey>& local = per_thread[tid];
      for (std::size_t i = tid; i < level.size(); i += threads_) {
        const std::uint64_t f2 = level[i];
        auto consider = [&](std::uint64_t f1) {
          if (!indistinguishable(sg_, model_, f1, f2)) return;
          const PairKey key = PairKey::of(f1, f2);
          if (!local || key < *local) local = key;
        };
        for (auto f1 : below_) consider(f1);
        for (std::size_t j = 0; j < i; ++j) consider(level[j]);
      }
    };
    if (threads_ == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned tid = 0; tid < threads_; ++tid) pool.emplace_back(worker, tid);
    }
    below_.insert(below_.end(), level.begin(), level.end());

    std::optional<PairKey> reduced;
    for (const auto& k : per_thread) {
      if (k && (!reduced || *k < *reduced)) reduced = k;
    }
    if (!reduced) return LevelOutcome::none;
    best = *reduced;
    return LevelOutcome::found;
  }

 private:
  const SmallGraph& sg_;
  int g_;
  DiagModel model_;
  unsigned threads_;
  std::vector<std::uint64_t> below_;
};

/// PMC search over symmetric differences. An indistinguishable pair is
/// F1 = A ∪ C, F2 = B ∪ C with A, B disjoint, no edge from A ∪ B to the
/// fault-free part, hence C ⊇ N(A ∪ B) \ (A ∪ B), and each nonempty side
/// inducing minimum degree >= g.
class StructuredPmcSearch {
 public:
  StructuredPmcSearch(const SmallGraph& sg, int g) : sg_(sg), g_(g) {}

  LevelOutcome run_level(int m, Budget& budget, PairKey& best) {
    if (!budget.charge(detail::binomial(sg_.vertex_count, m))) return LevelOutcome::exceeded;
    detail::for_each_combination(sg_.vertex_count, m, [&](std::uint64_t s) {
      if (sg_.induced_min_degree(s) >= g_) sides_.push_back({s, sg_.neighbor_union(s), m});
      return true;
    });

    std::optional<PairKey> found;
    bool exceeded = false;
    auto try_sides = [&](std::uint64_t a, std::uint64_t na, int sa, std::uint64_t b, std::uint64_t nb,
                         int sb) {
      if (!budget.charge()) {
        exceeded = true;
        return;
      }
      const std::uint64_t s = a | b;
      const std::uint64_t mandatory = (na | nb) & ~s;
      const int base = std::max(sa, sb) + std::popcount(mandatory);
      if (base > m) return;
      const std::uint64_t pool = sg_.all & ~s & ~mandatory;
      for (int extra = 0; extra <= m - base && !exceeded; ++extra) {
        detail::for_each_subset_of(pool, extra, [&](std::uint64_t d) {
          if (!budget.charge()) {
            exceeded = true;
            return false;
          }
          const std::uint64_t common = mandatory | d;
          const std::uint64_t f1 = a | common;
          const std::uint64_t f2 = b | common;
          if (sg_.faulty_set(f1, g_) && sg_.faulty_set(f2, g_)) {
            const PairKey key = PairKey::of(f1, f2);
            if (!found || key < *found) found = key;
          }
          return true;
        });
      }
    };

    for (std::size_t j = 0; j < sides_.size() && !exceeded; ++j) {
      const auto& b = sides_[j];
      try_sides(0, 0, 0, b.mask, b.nbrs, b.size);
      for (std::size_t i = 0; i < j && !exceeded; ++i) {
        const auto& a = sides_[i];
        if ((a.mask & b.mask) != 0) continue;
        try_sides(a.mask, a.nbrs, a.size, b.mask, b.nbrs, b.size);
      }
    }
    if (exceeded) return LevelOutcome::exceeded;
    if (!found) return LevelOutcome::none;
    best = *found;
    return LevelOutcome::found;
  }

 private:
  struct Side {
    std::uint64_t mask;
    std::uint64_t nbrs;
    int size;
  };

  const SmallGraph& sg_;
  int g_;
  std::vector<Side> sides_;  // nonempty sets with induced min degree >= g, by size
};

/// Runs levels 1..bound; reports the first level holding an indistinguishable pair.
struct LevelScan {
  LevelOutcome outcome = LevelOutcome::none;
  int level = 0;  // level reached (found / exceeded), or bound when none
  PairKey key;
};

LevelScan scan_levels(const Graph& g, int min_good, DiagModel model, int bound, Budget& budget,
                      SearchStrategy strategy, unsigned threads) {
  const SmallGraph sg(g);
  LevelScan scan;
  const bool structured = strategy == SearchStrategy::structured && model == DiagModel::pmc;
  PairEnumeration pairs(sg, min_good, model, threads);
  StructuredPmcSearch sides(sg, min_good);
  for (int m = 1; m <= bound; ++m) {
    scan.level = m;
    scan.outcome = structured ? sides.run_level(m, budget, scan.key) : pairs.run_level(m, budget, scan.key);
    if (scan.outcome != LevelOutcome::none) return scan;
  }
  scan.level = bound;
  return scan;
}

FaultPair to_pair(const PairKey& key) {
  return FaultPair(VertexSet::from_mask(key.f1), VertexSet::from_mask(key.f2));
}

bool in_claimed_range(const Graph& g, int min_good) {
  return g.origin() == Origin::hcn && min_good >= 1 && min_good <= g.dimension() - 1;
}

}  // namespace

SearchReport is_tg_diagnosable(const Graph& g, int min_good, int t, DiagModel model, Budget& budget,
                               SearchStrategy strategy, unsigned threads) {
  if (t < 0) throw std::invalid_argument("is_tg_diagnosable: t must be >= 0");
  if (min_good < 0) throw std::invalid_argument("is_tg_diagnosable: g must be >= 0");
  const int bound = std::min<int>(t, static_cast<int>(g.vertex_count()) - 1);
  const auto before = budget.used();
  const auto scan = scan_levels(g, min_good, model, bound, budget, strategy, threads);
  SearchReport report;
  report.visited = budget.used() - before;
  report.budget_state = scan.outcome == LevelOutcome::exceeded ? BudgetState::exceeded : BudgetState::complete;
  switch (scan.outcome) {
    case LevelOutcome::none: report.diagnosable = true; break;
    case LevelOutcome::found:
      report.diagnosable = false;
      report.witness = to_pair(scan.key);
      break;
    case LevelOutcome::exceeded: break;
  }
  return report;
}

DiagReport tg_formula_report(int n, int g, DiagModel model) {
  DiagReport r;
  r.model = model;
  r.mode = DiagMode::formula;
  r.n = n;
  r.g = g;
  r.t = r.t_lower = r.t_upper = static_cast<std::int64_t>(tg_formula(n, g));
  return r;
}

DiagReport tg_certificate(const Graph& hcn, int g, DiagModel model) {
  const auto start = std::chrono::steady_clock::now();
  const int n = hcn.dimension();
  const auto pair = extremal_pair(hcn, g);
  const auto f1_size = kappa_formula(n, g);
  const auto formula = tg_formula(n, g);
  const bool ok = pair.f1().size() == f1_size && pair.f2().size() == formula + 1 &&
                  pair.f1().size() < hcn.vertex_count() && pair.f2().size() < hcn.vertex_count() &&
                  is_g_good_neighbor_set(hcn, pair.f1(), g) && is_g_good_neighbor_set(hcn, pair.f2(), g) &&
                  !distinguishable(hcn, pair, model);
  if (!ok) {
    throw std::logic_error("tg_certificate: extremal pair failed verification at n=" + std::to_string(n) +
                           " g=" + std::to_string(g));
  }
  DiagReport r;
  r.model = model;
  r.mode = DiagMode::certificate;
  r.n = n;
  r.g = g;
  r.t = r.t_upper = static_cast<std::int64_t>(formula);
  r.t_lower = 0;
  r.witness = pair;
  r.in_claimed_range = in_claimed_range(hcn, g);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

DiagReport tg_exact(const Graph& g, int min_good, DiagModel model, Budget& budget, DiagMode mode,
                    unsigned threads) {
  if (min_good < 0) throw std::invalid_argument("tg_exact: g must be >= 0");
  if (mode != DiagMode::exact && mode != DiagMode::oracle) {
    throw std::invalid_argument("tg_exact: mode must be exact or oracle");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto strategy = mode == DiagMode::oracle ? SearchStrategy::pair_enumeration : SearchStrategy::structured;
  const int bound = static_cast<int>(g.vertex_count()) - 1;
  const auto scan = scan_levels(g, min_good, model, bound, budget, strategy, threads);

  DiagReport r;
  r.model = model;
  r.mode = mode;
  r.n = g.dimension();
  r.g = min_good;
  r.in_claimed_range = in_claimed_range(g, min_good);
  switch (scan.outcome) {
    case LevelOutcome::found:
      r.t = r.t_lower = r.t_upper = scan.level - 1;
      r.witness = to_pair(scan.key);
      break;
    case LevelOutcome::none:
      r.t = r.t_lower = r.t_upper = bound;
      break;
    case LevelOutcome::exceeded:
      r.budget_state = BudgetState::exceeded;
      r.t_lower = scan.level - 1;
      r.t_upper = bound;
      if (r.in_claimed_range) {
        // The extremal pair caps t_g from above whenever it verifies.
        try {
          const auto cert = tg_certificate(g, min_good, model);
          r.t_upper = std::min(r.t_upper, cert.t_upper);
          r.witness = cert.witness;
        } catch (const std::logic_error&) {
        }
      }
      r.t = r.t_upper;
      break;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::uint64_t random_member(std::mt19937_64& rng, std::uint64_t mask) {
  auto k = random_below(rng, static_cast<std::uint64_t>(std::popcount(mask)));
  for (; k > 0; --k) mask &= mask - 1;
  return mask & (~mask + 1);
}

std::uint64_t random_connected(const SmallGraph& sg, std::mt19937_64& rng, int size) {
  std::uint64_t x = random_member(rng, sg.all);
  while (std::popcount(x) < size) {
    const std::uint64_t frontier = sg.open_neighborhood(x);
    if (frontier == 0) break;
    x |= random_member(rng, frontier);
  }
  return x;
}

std::uint64_t random_subset(const SmallGraph& sg, std::mt19937_64& rng, int size) {
  std::uint64_t s = 0;
  while (std::popcount(s) < size && s != sg.all) s |= random_member(rng, sg.all & ~s);
  return s;
}

}  // namespace

ProbeReport probe_random_pairs(const Graph& g, int min_good, std::uint64_t bound, DiagModel model,
                               std::uint64_t trials, std::uint64_t seed) {
  const SmallGraph sg(g);
  std::mt19937_64 rng(seed);
  ProbeReport report;
  const int max_x = (1 << std::min(min_good, 5)) + 2;
  const std::uint64_t attempt_cap = 50 * trials + 1000;
  for (std::uint64_t attempt = 0; attempt < attempt_cap && report.probes < trials; ++attempt) {
    std::uint64_t f1 = 0, f2 = 0;
    const int x_size = 1 + static_cast<int>(random_below(rng, static_cast<std::uint64_t>(max_x)));
    switch (random_below(rng, 3)) {
      case 0: {  // N(X) vs N[X], plus shared noise
        const std::uint64_t x = random_connected(sg, rng, x_size);
        f1 = sg.open_neighborhood(x);
        f2 = f1 | x;
        const auto noise = random_subset(sg, rng, static_cast<int>(random_below(rng, 3))) & ~f2;
        f1 |= noise;
        f2 |= noise;
        break;
      }
      case 1: {  // random set and a few flips
        f1 = random_subset(sg, rng, static_cast<int>(random_below(rng, bound + 1)));
        f2 = f1;
        const auto flips = 1 + random_below(rng, 3);
        for (std::uint64_t i = 0; i < flips; ++i) f2 ^= random_member(rng, sg.all);
        break;
      }
      default: {  // damaged neighborhood: one member of N(X) swapped for a random vertex
        const std::uint64_t x = random_connected(sg, rng, x_size);
        f1 = sg.open_neighborhood(x);
        if (f1 != 0) f1 &= ~random_member(rng, f1);
        f1 |= random_member(rng, sg.all & ~x);
        f2 = f1 | x;
        break;
      }
    }
    if (f1 == f2 || !sg.faulty_set(f1, min_good) || !sg.faulty_set(f2, min_good)) continue;
    ++report.probes;
    if (!indistinguishable(sg, model, f1, f2)) continue;
    const auto largest = static_cast<std::uint64_t>(std::max(std::popcount(f1), std::popcount(f2)));
    if (largest <= bound) {
      if (report.violations++ == 0) report.first_violation = to_pair(PairKey::of(f1, f2));
    } else {
      ++report.above_bound_hits;
    }
  }
  return report;
}

}  // namespace hcndiag
