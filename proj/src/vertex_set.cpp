#include "hcndiag/vertex_set.hpp"

#include <iterator>
#include <stdexcept>

namespace hcndiag {

std::uint64_t VertexSet::to_mask() const {
  std::uint64_t mask = 0;
  for (auto v : members_) {
    if (v >= 64) throw std::out_of_range("VertexSet::to_mask: vertex id >= 64");
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

VertexSet VertexSet::with(VertexIndex v) const {
  VertexSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
  if (it == out.members_.end() || *it != v) out.members_.insert(it, v);
  return out;
}

VertexSet VertexSet::without(VertexIndex v) const {
  VertexSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
  if (it != out.members_.end() && *it == v) out.members_.erase(it);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(members_[i]);
  }
  return s + "}";
}

namespace {

template <class Op>
VertexSet combine(const VertexSet& a, const VertexSet& b, Op op) {
  std::vector<VertexIndex> out;
  op(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

}  // namespace

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_union(args...); });
}
VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_intersection(args...); });
}
VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_difference(args...); });
}
VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_symmetric_difference(args...); });
}
bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace hcndiag
