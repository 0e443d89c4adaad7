#pragma once

#include <cstdint>
#include <random>

#include "element.hpp"

namespace nil2 {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// stream seed for trial `ordinal` of a run seeded with `seed`; workers can
// process disjoint ordinal sets and still reproduce the single-threaded run
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t ordinal) {
  return splitmix64(seed ^ splitmix64(ordinal + 0x51ed270b2fe1full));
}

// uniform draw from [0, n) by rejection; avoids distribution objects whose
// sequences differ across standard libraries
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

inline Coord random_coord(std::mt19937_64& rng, Coord bound) {
  return static_cast<Coord>(bounded_rand(rng, 2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
}

inline MalcevElement random_element(std::mt19937_64& rng, const GroupContext& ctx, Coord gen_bound,
                                    Coord comm_bound) {
  MalcevElement g = ctx.identity();
  for (auto& a : g.gens) a = random_coord(rng, gen_bound);
  for (auto& e : g.comms) e = random_coord(rng, comm_bound);
  return g;
}

}  // namespace nil2
