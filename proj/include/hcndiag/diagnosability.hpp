#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hcndiag/budget.hpp"
#include "hcndiag/graph.hpp"

namespace hcndiag {

enum class DiagModel { pmc, mm_star };

[[nodiscard]] std::string_view to_string(DiagModel m);  // "pmc" | "mm"
[[nodiscard]] std::optional<DiagModel> parse_model(std::string_view s);

/// Two distinct fault sets and their symmetric difference.
class FaultPair {
 public:
  /// Throws std::invalid_argument if f1 == f2.
  FaultPair(FaultSet f1, FaultSet f2);

  [[nodiscard]] const FaultSet& f1() const { return f1_; }
  [[nodiscard]] const FaultSet& f2() const { return f2_; }
  [[nodiscard]] const VertexSet& sym_diff() const { return sym_diff_; }

  /// Same pair ordered so that f1 precedes f2 in canonical (size, lex) order.
  [[nodiscard]] FaultPair canonical() const;

  friend bool operator==(const FaultPair&, const FaultPair&) = default;

 private:
  FaultSet f1_;
  FaultSet f2_;
  VertexSet sym_diff_;
};

/// Some edge joins V \ (F1 ∪ F2) to F1 Δ F2.
[[nodiscard]] bool pmc_distinguishable(const Graph& g, const FaultPair& p);

/// Which MM* distinguishing condition holds first (checked in order 1, 2, 3).
enum class MmCondition {
  none,
  outside_comparator,  // (1) u, w fault-free under both, v ∈ F1 Δ F2, uw, vw ∈ E
  first_only_pair,     // (2) u, v ∈ F1 \ F2 share a fault-free comparator w
  second_only_pair,    // (3) u, v ∈ F2 \ F1 share a fault-free comparator w
};

[[nodiscard]] MmCondition mm_condition(const Graph& g, const FaultPair& p);
[[nodiscard]] bool mm_distinguishable(const Graph& g, const FaultPair& p);
[[nodiscard]] bool distinguishable(const Graph& g, const FaultPair& p, DiagModel m);

/// False only if condition (1) of MM* holds while the PMC condition fails.
[[nodiscard]] bool mm_distinguishable_implies_pmc(const Graph& g, const FaultPair& p);

/// (N(X), N[X]) for the canonical Q_g in cube 0...0; 1 <= g <= n-1.
[[nodiscard]] FaultPair extremal_pair(const Graph& hcn, int g);

/// 2^g (n + 2 - g) - 1, for n >= 2 and 1 <= g <= n-1.
[[nodiscard]] std::uint64_t tg_formula(int n, int g);

enum class SearchStrategy {
  structured,        // PMC: symmetric-difference / common-part search
  pair_enumeration,  // plain enumeration of faulty-set pairs; both models
};

[[nodiscard]] std::string_view to_string(SearchStrategy s);

struct SearchReport {
  /// nullopt when the budget ran out before a verdict.
  std::optional<bool> diagnosable;
  std::optional<FaultPair> witness;
  BudgetState budget_state = BudgetState::complete;
  std::uint64_t visited = 0;
};

/// Decides g-good-neighbor t-diagnosability (graphs with at most 64 vertices).
/// On failure the witness is the canonically smallest indistinguishable pair:
/// minimal max(|F1|,|F2|), then minimal |F1|+|F2|, then lexicographic.
/// MM* always uses pair enumeration. `threads` never changes the result.
[[nodiscard]] SearchReport is_tg_diagnosable(const Graph& g, int min_good, int t, DiagModel model,
                                             Budget& budget,
                                             SearchStrategy strategy = SearchStrategy::structured,
                                             unsigned threads = 1);

enum class DiagMode { formula, certificate, exact, oracle };

[[nodiscard]] std::string_view to_string(DiagMode m);
[[nodiscard]] std::optional<DiagMode> parse_mode(std::string_view s);

struct DiagReport {
  DiagModel model = DiagModel::pmc;
  DiagMode mode = DiagMode::formula;
  int n = 0;
  int g = 0;
  /// Best known value: exact t_g when complete, otherwise t_upper.
  std::int64_t t = 0;
  std::int64_t t_lower = 0;
  std::int64_t t_upper = 0;
  std::optional<FaultPair> witness;
  BudgetState budget_state = BudgetState::complete;
  double elapsed_ms = 0.0;
  /// False for g outside [1, n-1] or graphs that are not HCN_n.
  bool in_claimed_range = true;
};

[[nodiscard]] DiagReport tg_formula_report(int n, int g, DiagModel model);

/// Builds the extremal pair, checks both sets are g-good-neighbor faulty sets
/// of the formula sizes and indistinguishable under `model`. t = t_upper =
/// formula; t_lower = 0. Throws std::logic_error if any check fails.
[[nodiscard]] DiagReport tg_certificate(const Graph& hcn, int g, DiagModel model);

/// Largest t for which is_tg_diagnosable holds. When the budget runs out the
/// report brackets t in [t_lower, t_upper]. `oracle` mode forces pair enumeration.
[[nodiscard]] DiagReport tg_exact(const Graph& g, int min_good, DiagModel model, Budget& budget,
                                  DiagMode mode = DiagMode::exact, unsigned threads = 1);

/// Seeded random probing of faulty-set pairs with max size <= bound, biased
/// toward near-extremal shapes (N(X) with X a small connected set).
struct ProbeReport {
  std::uint64_t probes = 0;              // pairs actually tested (both sets valid)
  std::uint64_t violations = 0;          // indistinguishable with max size <= bound
  std::uint64_t above_bound_hits = 0;    // indistinguishable with max size > bound
  std::optional<FaultPair> first_violation;
};

[[nodiscard]] ProbeReport probe_random_pairs(const Graph& g, int min_good, std::uint64_t bound,
                                             DiagModel model, std::uint64_t trials,
                                             std::uint64_t seed);

}  // namespace hcndiag
