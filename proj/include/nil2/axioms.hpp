#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "element.hpp"
#include "order.hpp"
#include "rng.hpp"
#include "textform.hpp"

namespace nil2 {

struct AxiomCheckResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

namespace detail {

// one randomized trial; returns a failure description or empty string
using AxiomTrial = std::function<std::string(std::mt19937_64&, const GroupContext&, Coord)>;

inline std::string trial_associativity(std::mt19937_64& rng, const GroupContext& ctx, Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const auto h = random_element(rng, ctx, b, b);
  const auto f = random_element(rng, ctx, b, b);
  if (multiply(multiply(g, h), f) != multiply(g, multiply(h, f)))
    return "(gh)f != g(hf) for g=" + to_text(g) + " h=" + to_text(h) + " f=" + to_text(f);
  return {};
}

inline std::string trial_identity_inverse(std::mt19937_64& rng, const GroupContext& ctx, Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const auto e = ctx.identity();
  if (multiply(g, e) != g || multiply(e, g) != g) return "identity fails on " + to_text(g);
  const auto gi = inverse(g);
  if (!is_identity(multiply(g, gi)) || !is_identity(multiply(gi, g)))
    return "inverse fails on " + to_text(g);
  if (inverse(gi) != g) return "double inverse fails on " + to_text(g);
  return {};
}

inline std::string trial_power_iteration(std::mt19937_64& rng, const GroupContext& ctx, Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const Coord m = random_coord(rng, 8);
  MalcevElement iterated = ctx.identity();
  const MalcevElement step = m >= 0 ? g : inverse(g);
  const Coord reps = m >= 0 ? m : -m;
  for (Coord t = 0; t < reps; ++t) iterated = multiply(iterated, step);
  if (power(g, m) != iterated)
    return "power disagrees with iteration on " + to_text(g) + " at m=" + std::to_string(m);
  return {};
}

inline std::string trial_commutator(std::mt19937_64& rng, const GroupContext& ctx, Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const auto h = random_element(rng, ctx, b, b);
  const auto f = random_element(rng, ctx, b, b);
  const auto com = commutator(g, h);
  if (!is_central(com)) return "[g,h] not central for g=" + to_text(g) + " h=" + to_text(h);
  const auto expanded = multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
  if (com != expanded) return "[g,h] != g^-1h^-1gh for g=" + to_text(g) + " h=" + to_text(h);
  if (commutator(g, multiply(h, f)) != multiply(commutator(g, h), commutator(g, f)))
    return "[g,hf] != [g,h][g,f] for g=" + to_text(g) + " h=" + to_text(h) + " f=" + to_text(f);
  if (commutator(multiply(g, h), f) != multiply(commutator(g, f), commutator(h, f)))
    return "[gh,f] != [g,f][h,f] for g=" + to_text(g) + " h=" + to_text(h) + " f=" + to_text(f);
  return {};
}

inline std::string trial_order_total_transitive(std::mt19937_64& rng, const GroupContext& ctx,
                                                Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const auto h = random_element(rng, ctx, b, b);
  const auto f = random_element(rng, ctx, b, b);
  const int lt = compare(g, h) == Comparison::LT;
  const int eq = g == h;
  const int gt = compare(g, h) == Comparison::GT;
  if (lt + eq + gt != 1)
    return "trichotomy fails for g=" + to_text(g) + " h=" + to_text(h);
  if (compare(g, h) != Comparison::LT || compare(h, f) != Comparison::LT) return {};
  if (compare(g, f) != Comparison::LT)
    return "transitivity fails for g=" + to_text(g) + " h=" + to_text(h) + " f=" + to_text(f);
  return {};
}

inline std::string trial_order_bi_invariant(std::mt19937_64& rng, const GroupContext& ctx,
                                            Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const auto h = random_element(rng, ctx, b, b);
  const auto f = random_element(rng, ctx, b, b);
  if (compare(g, h) != Comparison::LT) return {};
  if (compare(multiply(f, g), multiply(f, h)) != Comparison::LT)
    return "left invariance fails for f=" + to_text(f) + " g=" + to_text(g) + " h=" + to_text(h);
  if (compare(multiply(g, f), multiply(h, f)) != Comparison::LT)
    return "right invariance fails for f=" + to_text(f) + " g=" + to_text(g) + " h=" + to_text(h);
  return {};
}

inline std::string trial_positive_cone(std::mt19937_64& rng, const GroupContext& ctx, Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const auto h = random_element(rng, ctx, b, b);
  const int pos = is_positive(g);
  const int neg = is_positive(inverse(g));
  const int idn = is_identity(g);
  if (pos + neg + idn != 1) return "cone trichotomy fails for " + to_text(g);
  if (is_positive(g) && is_positive(h) && !is_positive(multiply(g, h)))
    return "cone not closed under product: " + to_text(g) + ", " + to_text(h);
  if (is_positive(g)) {
    const auto conj = multiply(multiply(inverse(h), g), h);
    if (!is_positive(conj))
      return "cone not closed under conjugation: " + to_text(g) + " by " + to_text(h);
  }
  return {};
}

inline std::string trial_square_commutation(std::mt19937_64& rng, const GroupContext& ctx,
                                            Coord b) {
  auto g = random_element(rng, ctx, b, b);
  auto h = random_element(rng, ctx, b, b);
  // every other trial uses a pair built to commute, so both sides of the
  // equivalence get exercised
  if (bounded_rand(rng, 2) == 0) {
    const Coord t = random_coord(rng, 3);
    MalcevElement central = ctx.identity();
    for (auto& e : central.comms) e = random_coord(rng, b);
    h = multiply(power(g, t), central);
  }
  const bool square_commutes = commutes(g, multiply(h, h));
  const bool plain_commutes = commutes(g, h);
  if (square_commutes != plain_commutes)
    return "[g,h^2] = 1 and [g,h] = 1 disagree for g=" + to_text(g) + " h=" + to_text(h);
  return {};
}

inline std::string trial_torsion_free(std::mt19937_64& rng, const GroupContext& ctx, Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const auto h = random_element(rng, ctx, b, b);
  const Coord m = 1 + static_cast<Coord>(bounded_rand(rng, 8));
  if (g != h && power(g, m) == power(h, m))
    return "g != h but g^m = h^m for g=" + to_text(g) + " h=" + to_text(h) +
           " m=" + std::to_string(m);
  MalcevElement c = ctx.identity();
  for (auto& e : c.comms) e = random_coord(rng, b);
  if (!is_identity(c)) {
    const Coord e = random_coord(rng, 8);
    const auto root = central_root_exponent(power(c, e), c);
    if (!root || *root != e)
      return "central root of c^e not recovered for c=" + to_text(c) + " e=" + std::to_string(e);
  }
  return {};
}

inline std::string trial_reversed_mirror(std::mt19937_64& rng, const GroupContext& ctx, Coord b) {
  const auto g = random_element(rng, ctx, b, b);
  const auto h = random_element(rng, ctx, b, b);
  if (compare(g, h, OrderDirection::reversed) != compare(h, g, OrderDirection::standard))
    return "reversed order is not the mirror for g=" + to_text(g) + " h=" + to_text(h);
  return {};
}

}  // namespace detail

// Randomized checks of the algebraic laws the engine relies on. Each named
// law runs `trials` independent instances with coordinates in [-bound, bound].
inline std::vector<AxiomCheckResult> run_axiom_suite(int generators, std::uint64_t trials,
                                                     std::uint64_t seed, Coord bound = 6) {
  const GroupContext ctx(generators);
  const std::vector<std::pair<std::string, detail::AxiomTrial>> laws = {
      {"associativity", detail::trial_associativity},
      {"identity_and_inverses", detail::trial_identity_inverse},
      {"power_matches_iteration", detail::trial_power_iteration},
      {"commutator_central_bilinear", detail::trial_commutator},
      {"order_total_transitive", detail::trial_order_total_transitive},
      {"order_bi_invariant", detail::trial_order_bi_invariant},
      {"positive_cone_closed", detail::trial_positive_cone},
      {"square_commutation_class2", detail::trial_square_commutation},
      {"torsion_free_roots", detail::trial_torsion_free},
      {"reversed_order_mirror", detail::trial_reversed_mirror},
  };
  std::vector<AxiomCheckResult> out;
  out.reserve(laws.size());
  std::uint64_t law_index = 0;
  for (const auto& [name, trial] : laws) {
    AxiomCheckResult r;
    r.name = name;
    r.trials = trials;
    std::mt19937_64 rng(stream_seed(seed, law_index++));
    for (std::uint64_t t = 0; t < trials; ++t) {
      const std::string failure = trial(rng, ctx, bound);
      if (!failure.empty()) {
        ++r.failures;
        if (r.first_failure.empty()) r.first_failure = failure;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nil2
