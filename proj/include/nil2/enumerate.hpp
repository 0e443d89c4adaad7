#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "element.hpp"
#include "order.hpp"
#include "rng.hpp"
#include "subset.hpp"

namespace nil2 {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Coordinate box to draw subsets from: generator exponents in
// [-gen_bound, gen_bound], commutator exponents in [-comm_bound, comm_bound].
struct BoxSpec {
  int generators = 2;
  Coord gen_bound = 1;
  Coord comm_bound = 1;
  int subset_size = 1;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;

  GroupContext context() const { return GroupContext(generators); }

  void validate() const {
    if (generators < 1) throw std::invalid_argument("generators must be >= 1");
    if (gen_bound < 0 || comm_bound < 0) throw std::invalid_argument("bounds must be >= 0");
    if (subset_size < 1) throw std::invalid_argument("subset size must be >= 1");
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  }
};

enum class EnumerationMode { exhaustive, sampled };

inline const char* to_string(EnumerationMode m) {
  return m == EnumerationMode::exhaustive ? "exhaustive" : "sampled";
}

// (2g+1)^n * (2c+1)^{n(n-1)/2}, refusing boxes too large to materialize
inline std::uint64_t box_universe_size(const BoxSpec& box) {
  box.validate();
  const GroupContext ctx = box.context();
  constexpr std::uint64_t kMax = 1u << 24;
  std::uint64_t total = 1;
  auto scale = [&total](std::uint64_t factor) {
    if (total > kMax / factor + 1) throw std::invalid_argument("element box too large");
    total *= factor;
    if (total > kMax) throw std::invalid_argument("element box too large");
  };
  for (int t = 0; t < ctx.generators(); ++t)
    scale(2 * static_cast<std::uint64_t>(box.gen_bound) + 1);
  for (int t = 0; t < ctx.commutators(); ++t)
    scale(2 * static_cast<std::uint64_t>(box.comm_bound) + 1);
  return total;
}

// all elements of the box, ascending
inline std::vector<MalcevElement> box_universe(const BoxSpec& box) {
  const std::uint64_t total = box_universe_size(box);
  const GroupContext ctx = box.context();
  std::vector<MalcevElement> out;
  out.reserve(total);
  MalcevElement cur = ctx.identity();
  for (auto& a : cur.gens) a = -box.gen_bound;
  for (auto& e : cur.comms) e = -box.comm_bound;
  for (;;) {
    out.push_back(cur);
    // odometer step, least significant coordinate last
    std::size_t t = cur.comms.size();
    while (t > 0) {
      --t;
      if (cur.comms[t] < box.comm_bound) {
        ++cur.comms[t];
        goto stepped;
      }
      cur.comms[t] = -box.comm_bound;
    }
    t = cur.gens.size();
    while (t > 0) {
      --t;
      if (cur.gens[t] < box.gen_bound) {
        ++cur.gens[t];
        goto stepped;
      }
      cur.gens[t] = -box.gen_bound;
    }
    break;
  stepped:;
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

// binomial coefficient, saturating at UINT64_MAX instead of overflowing
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t t = 1; t <= k; ++t) {
    const std::uint64_t factor = n - k + t;
    if (result > UINT64_MAX / factor) return UINT64_MAX;
    // result * factor / t is integral at every step
    result = result * factor / t;
  }
  return result;
}

// Visit k-subsets of the box universe. Exhaustive mode walks index
// combinations in lexicographic order; sampled mode draws `budget`
// independent subsets, one RNG stream per ordinal. Ordinals are global:
// a worker visits those congruent to `worker` mod `stride`, so any
// partition of the ordinal space reproduces the single-threaded run.
template <typename Visitor>
void for_each_subset_stride(const BoxSpec& box, EnumerationMode mode, unsigned worker,
                            unsigned stride, Visitor&& visit) {
  if (stride == 0 || worker >= stride) throw std::invalid_argument("bad worker/stride");
  const std::vector<MalcevElement> universe = box_universe(box);
  const GroupContext ctx = box.context();
  const std::size_t u = universe.size();
  const std::size_t k = static_cast<std::size_t>(box.subset_size);
  if (k > u) throw std::invalid_argument("subset size exceeds the element universe");

  if (mode == EnumerationMode::exhaustive) {
    const std::uint64_t count = binomial_saturating(u, k);
    if (count > box.budget)
      throw BudgetExceeded("exhaustive enumeration needs more than budget=" +
                           std::to_string(box.budget) + " subsets");
    std::vector<std::size_t> idx(k);
    for (std::size_t t = 0; t < k; ++t) idx[t] = t;
    std::uint64_t ordinal = 0;
    for (;;) {
      if (ordinal % stride == worker) {
        std::vector<MalcevElement> elems;
        elems.reserve(k);
        for (std::size_t t : idx) elems.push_back(universe[t]);
        visit(ordinal, Subset::from_ascending(ctx, std::move(elems)));
      }
      ++ordinal;
      // advance the combination
      std::size_t t = k;
      while (t > 0) {
        --t;
        if (idx[t] != t + u - k) {
          ++idx[t];
          for (std::size_t r = t + 1; r < k; ++r) idx[r] = idx[r - 1] + 1;
          break;
        }
        if (t == 0) return;
      }
    }
  }

  for (std::uint64_t ordinal = worker; ordinal < box.budget; ordinal += stride) {
    std::mt19937_64 rng(stream_seed(box.seed, ordinal));
    std::vector<std::size_t> picked;
    picked.reserve(k);
    while (picked.size() < k) {
      const std::size_t cand = static_cast<std::size_t>(bounded_rand(rng, u));
      bool fresh = true;
      for (std::size_t p : picked)
        if (p == cand) fresh = false;
      if (fresh) picked.push_back(cand);
    }
    std::sort(picked.begin(), picked.end());
    std::vector<MalcevElement> elems;
    elems.reserve(k);
    for (std::size_t t : picked) elems.push_back(universe[t]);
    visit(ordinal, Subset::from_ascending(ctx, std::move(elems)));
  }
}

template <typename Visitor>
void for_each_subset(const BoxSpec& box, EnumerationMode mode, Visitor&& visit) {
  for_each_subset_stride(box, mode, 0, 1, std::forward<Visitor>(visit));
}

}  // namespace nil2
