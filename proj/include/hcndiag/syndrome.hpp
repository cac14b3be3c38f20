#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hcndiag/budget.hpp"
#include "hcndiag/diagnosability.hpp"
#include "hcndiag/graph.hpp"

namespace hcndiag {

struct PmcTest {
  VertexIndex tester;
  VertexIndex testee;
  friend bool operator==(const PmcTest&, const PmcTest&) = default;
};

struct MmComparison {
  VertexIndex comparator;
  VertexIndex left;   // left < right
  VertexIndex right;
  friend bool operator==(const MmComparison&, const MmComparison&) = default;
};

/// Complete test assignment. PMC: both directions of every edge, ordered by
/// (tester, testee). MM*: every comparator w with every pair of its neighbors,
/// ordered by (w, left, right).
struct TestPlan {
  DiagModel model = DiagModel::pmc;
  std::vector<PmcTest> pmc;
  std::vector<MmComparison> mm;

  [[nodiscard]] std::size_t size() const { return model == DiagModel::pmc ? pmc.size() : mm.size(); }
  /// The unit whose fault status decides whether result i is trustworthy.
  [[nodiscard]] VertexIndex unit(std::size_t i) const {
    return model == DiagModel::pmc ? pmc[i].tester : mm[i].comparator;
  }
};

[[nodiscard]] TestPlan enumerate_tests(const Graph& g, DiagModel model);

/// Results aligned with enumerate_tests order. 0 = pass/agree, 1 = fail/disagree.
struct Syndrome {
  DiagModel model = DiagModel::pmc;
  std::vector<std::uint8_t> results;
  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

/// What faulty units report. Fault-free units always follow the model.
class LiarPolicy {
 public:
  enum class Mode { seeded_random, all_zero, all_one, adversarial_enumerate, mimic };

  static LiarPolicy seeded_random(std::uint64_t seed) { return LiarPolicy(Mode::seeded_random, seed); }
  static LiarPolicy all_zero() { return LiarPolicy(Mode::all_zero, 0); }
  static LiarPolicy all_one() { return LiarPolicy(Mode::all_one, 0); }
  /// Faulty result k takes bit k of `index`; at most 20 faulty results.
  static LiarPolicy adversarial(std::uint64_t index) { return LiarPolicy(Mode::adversarial_enumerate, index); }
  /// Faulty units answer as a fault-free unit would if `pretend` were the fault set.
  static LiarPolicy mimic(FaultSet pretend) {
    LiarPolicy p(Mode::mimic, 0);
    p.pretend_ = std::move(pretend);
    return p;
  }

  [[nodiscard]] Mode mode() const { return mode_; }
  [[nodiscard]] std::uint64_t value() const { return value_; }
  [[nodiscard]] const FaultSet& pretend() const { return pretend_; }

 private:
  LiarPolicy(Mode m, std::uint64_t v) : mode_(m), value_(v) {}
  Mode mode_;
  std::uint64_t value_;
  FaultSet pretend_;
};

inline constexpr std::size_t kMaxAdversarialBits = 20;

/// The result a fault-free unit reports for test i when `faults` is the fault set.
[[nodiscard]] std::uint8_t honest_result(const TestPlan& plan, std::size_t i, const FaultSet& faults);

[[nodiscard]] Syndrome generate_syndrome(const Graph& g, const FaultSet& faults, DiagModel model,
                                         const LiarPolicy& policy);

/// Number of results produced by faulty units (the free bits of σ(F)).
[[nodiscard]] std::size_t faulty_result_count(const TestPlan& plan, const FaultSet& faults);

/// Calls fn(syndrome) for every syndrome consistent with `faults`. Throws
/// std::invalid_argument if more than kMaxAdversarialBits results are free.
template <class Fn>
void enumerate_syndromes(const Graph& g, const FaultSet& faults, DiagModel model, Fn&& fn);

/// Every result from a fault-free unit matches the model. Throws
/// std::invalid_argument if the syndrome does not cover the test plan.
[[nodiscard]] bool is_consistent(const Graph& g, const FaultSet& faults, const Syndrome& s);

/// A syndrome consistent with both sets, if one exists (σ(F1) ∩ σ(F2) ≠ ∅).
/// Built test by test: a result is forced by each set whose view of the unit
/// is fault-free; the sets share a syndrome iff no forced values clash.
[[nodiscard]] std::optional<Syndrome> shared_syndrome(const Graph& g, const FaultSet& f1, const FaultSet& f2,
                                                      DiagModel model);

struct Diagnosis {
  std::vector<FaultSet> candidates;  // canonical order: size, then lexicographic
  BudgetState budget_state = BudgetState::complete;
};

/// Every proper g-good-neighbor faulty set of size <= t consistent with `s`.
[[nodiscard]] Diagnosis diagnose(const Graph& g, const Syndrome& s, int min_good, int t, Budget& budget);

/// `# model=<pmc|mm> n=<n>` then one line per test: `u v r` or `w u v r`.
void write_syndrome(std::ostream& out, const TestPlan& plan, const Syndrome& s, int n);

struct SyndromeFile {
  DiagModel model;
  int n;
  Syndrome syndrome;
};

/// Parses the syndrome format and checks every line against the HCN_n test
/// plan. Throws std::runtime_error on malformed input.
[[nodiscard]] SyndromeFile read_syndrome(std::istream& in);

template <class Fn>
void enumerate_syndromes(const Graph& g, const FaultSet& faults, DiagModel model, Fn&& fn) {
  const auto plan = enumerate_tests(g, model);
  const auto free_bits = faulty_result_count(plan, faults);
  if (free_bits > kMaxAdversarialBits) {
    throw std::invalid_argument("enumerate_syndromes: too many faulty-unit results to enumerate");
  }
  for (std::uint64_t index = 0; index < (std::uint64_t{1} << free_bits); ++index) {
    fn(generate_syndrome(g, faults, model, LiarPolicy::adversarial(index)));
  }
}

}  // namespace hcndiag
