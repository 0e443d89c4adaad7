#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "element.hpp"
#include "order.hpp"

namespace nil2 {

// Finite nonempty set of group elements, kept strictly ascending under the
// standard order. Reversed-order logic walks the same storage from the
// other end, so the invariant never depends on the direction in use.
class Subset {
 public:
  static Subset from_elements(const GroupContext& ctx, std::vector<MalcevElement> elems) {
    validate_shapes(ctx, elems);
    return Subset(ctx, sorted_unique(std::move(elems)));
  }

  // trusted fast path for already-sorted streams; still verifies in O(k)
  static Subset from_ascending(const GroupContext& ctx, std::vector<MalcevElement> elems) {
    validate_shapes(ctx, elems);
    for (std::size_t i = 0; i + 1 < elems.size(); ++i)
      if (!element_less(elems[i], elems[i + 1]))
        throw std::invalid_argument("elements not strictly ascending");
    return Subset(ctx, std::move(elems));
  }

  const GroupContext& context() const { return ctx_; }
  std::size_t size() const { return elems_.size(); }
  const MalcevElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<MalcevElement>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  const MalcevElement& min(OrderDirection dir = OrderDirection::standard) const {
    return dir == OrderDirection::standard ? elems_.front() : elems_.back();
  }
  const MalcevElement& max(OrderDirection dir = OrderDirection::standard) const {
    return dir == OrderDirection::standard ? elems_.back() : elems_.front();
  }

  bool contains(const MalcevElement& g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g, element_less);
  }

  Subset without_index(std::size_t i) const {
    std::vector<MalcevElement> rest;
    rest.reserve(elems_.size() - 1);
    for (std::size_t t = 0; t < elems_.size(); ++t)
      if (t != i) rest.push_back(elems_[t]);
    return Subset(ctx_, std::move(rest));
  }

  bool operator==(const Subset&) const = default;

 private:
  Subset(const GroupContext& ctx, std::vector<MalcevElement> elems)
      : ctx_(ctx), elems_(std::move(elems)) {
    if (elems_.empty()) throw std::invalid_argument("subset must be nonempty");
  }

  static void validate_shapes(const GroupContext& ctx, const std::vector<MalcevElement>& elems) {
    for (const auto& g : elems)
      if (!ctx.matches(g)) throw DimensionError("element does not match the group rank");
  }

  GroupContext ctx_;
  std::vector<MalcevElement> elems_;
};

inline Subset sort_subset(const GroupContext& ctx, std::vector<MalcevElement> elems) {
  return Subset::from_elements(ctx, std::move(elems));
}

inline Subset conjugated(const Subset& s, const MalcevElement& g) {
  const MalcevElement gi = inverse(g);
  std::vector<MalcevElement> out;
  out.reserve(s.size());
  for (const auto& e : s) out.push_back(multiply(multiply(gi, e), g));
  return Subset::from_elements(s.context(), std::move(out));
}

}  // namespace nil2
