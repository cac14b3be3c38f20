#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hcndiag {

/// Vertex index into a Graph. HCN_n ids are x * 2^n + y and fit in 30 bits for n <= 15.
using VertexIndex = std::uint32_t;

/// Sorted, duplicate-free set of vertex indices with value semantics.
///
/// Sparse on purpose: the certificate checks at n = 7 and beyond touch a few
/// hundred vertices out of 2^{2n}, so membership is a binary search instead of
/// a dense bitset over the whole graph. Ordering is lexicographic on the sorted
/// member list, which is the canonical order used for witness tie-breaking.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexIndex> ids) : VertexSet(std::vector<VertexIndex>(ids)) {}
  explicit VertexSet(std::vector<VertexIndex> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  /// Members of a 64-bit mask (bit i set => vertex i).
  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    while (mask != 0) {
      s.members_.push_back(static_cast<VertexIndex>(std::countr_zero(mask)));
      mask &= mask - 1;
    }
    return s;
  }

  [[nodiscard]] std::uint64_t to_mask() const;

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(VertexIndex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  [[nodiscard]] std::span<const VertexIndex> members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] VertexIndex max_member() const { return members_.back(); }

  [[nodiscard]] VertexSet with(VertexIndex v) const;
  [[nodiscard]] VertexSet without(VertexIndex v) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<VertexIndex> members_;
};

[[nodiscard]] VertexSet set_union(const VertexSet& a, const VertexSet& b);
[[nodiscard]] VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
[[nodiscard]] VertexSet set_difference(const VertexSet& a, const VertexSet& b);
[[nodiscard]] VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b);
[[nodiscard]] bool is_subset(const VertexSet& a, const VertexSet& b);

/// Fault sets are plain vertex sets; predicates over them are free functions.
using FaultSet = VertexSet;

/// Canonical order used everywhere a "smallest" set is reported: cardinality
/// first, then lexicographic on the sorted members.
[[nodiscard]] inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace hcndiag
