#pragma once

#include <cstdint>
#include <string_view>

namespace hcndiag {

enum class BudgetState { complete, exceeded };

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

[[nodiscard]] constexpr std::string_view to_string(BudgetState s) {
  return s == BudgetState::complete ? "complete" : "exceeded";
}

/// Node-count cap for exponential searches. Every search charges the number of
/// candidates it visits; once `used` would pass `cap` the search stops and
/// reports BudgetState::exceeded.
class Budget {
 public:
  explicit Budget(std::uint64_t cap = kDefaultBudget) : cap_(cap) {}

  /// Charges `n` candidates. Returns false (and charges nothing) if that would exceed the cap.
  bool charge(std::uint64_t n = 1) {
    if (n > cap_ - used_) {
      exhausted_ = true;
      return false;
    }
    used_ += n;
    return true;
  }

  [[nodiscard]] std::uint64_t cap() const { return cap_; }
  [[nodiscard]] std::uint64_t used() const { return used_; }
  [[nodiscard]] bool exhausted() const { return exhausted_; }
  [[nodiscard]] BudgetState state() const {
    return exhausted_ ? BudgetState::exceeded : BudgetState::complete;
  }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

}  // namespace hcndiag
