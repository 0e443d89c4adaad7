#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nil2 {

using Coord = std::int64_t;

// Thrown when a coordinate operation would leave the machine-word range.
// Boxes explored here are tiny, so failing loudly beats silent wraparound.
struct OverflowError : std::overflow_error {
  OverflowError() : std::overflow_error("coordinate arithmetic overflow") {}
};

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

inline Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Coord checked_sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Coord checked_neg(Coord a) { return checked_sub(0, a); }

inline Coord checked_abs(Coord a) { return a < 0 ? checked_neg(a) : a; }

// m*(m-1)/2, valid for negative m as well (the product is always even).
inline Coord choose_two(Coord m) { return checked_mul(m, checked_sub(m, 1)) / 2; }

// Normal-form coordinates of an element of the free nilpotent group of
// class 2 on n generators x_1..x_n:
//
//   g = x_1^{a_1} ... x_n^{a_n} * prod_{i<j} c_ij^{e_ij},   c_ij = [x_i, x_j],
//
// with the commutator convention [g,h] = g^-1 h^-1 g h (so gh = hg[g,h]).
// `gens` holds a_1..a_n; `comms` holds the e_ij in lexicographic pair order
// (1,2), (1,3), ..., (1,n), (2,3), ... Every c_ij is central, so the comms
// block commutes with everything.
struct MalcevElement {
  std::vector<Coord> gens;
  std::vector<Coord> comms;

  bool operator==(const MalcevElement&) const = default;
};

inline void check_same_shape(const MalcevElement& g, const MalcevElement& h) {
  if (g.gens.size() != h.gens.size() || g.comms.size() != h.comms.size())
    throw DimensionError("elements come from groups of different rank");
}

// Dimension data of the free class-2 group on n generators (n = 2 is the
// discrete Heisenberg group).
class GroupContext {
 public:
  explicit GroupContext(int generators) : n_(generators) {
    if (generators < 1) throw std::invalid_argument("generator count must be >= 1");
  }

  int generators() const { return n_; }
  int commutators() const { return n_ * (n_ - 1) / 2; }

  // storage slot of c_ij for 0-based i < j
  int pair_index(int i, int j) const {
    if (i < 0 || j <= i || j >= n_) throw std::invalid_argument("bad commutator pair");
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  MalcevElement identity() const {
    return MalcevElement{std::vector<Coord>(static_cast<std::size_t>(n_), 0),
                         std::vector<Coord>(static_cast<std::size_t>(commutators()), 0)};
  }

  MalcevElement generator(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("generator index out of range");
    MalcevElement g = identity();
    g.gens[static_cast<std::size_t>(i)] = 1;
    return g;
  }

  MalcevElement central_generator(int i, int j) const {
    MalcevElement g = identity();
    g.comms[static_cast<std::size_t>(pair_index(i, j))] = 1;
    return g;
  }

  MalcevElement element(std::vector<Coord> gens, std::vector<Coord> comms) const {
    if (gens.size() != static_cast<std::size_t>(n_) ||
        comms.size() != static_cast<std::size_t>(commutators()))
      throw DimensionError("coordinate vectors do not match the group rank");
    return MalcevElement{std::move(gens), std::move(comms)};
  }

  bool matches(const MalcevElement& g) const {
    return g.gens.size() == static_cast<std::size_t>(n_) &&
           g.comms.size() == static_cast<std::size_t>(commutators());
  }

  bool operator==(const GroupContext&) const = default;

 private:
  int n_;
};

// Product in normal form. Collecting the right factor's generators through
// the left factor's tail picks up one c_ij^{-pq} per swap:
//   x_j^q x_i^p = x_i^p x_j^q c_ij^{-pq}   for i < j.
inline MalcevElement multiply(const MalcevElement& g, const MalcevElement& h) {
  check_same_shape(g, h);
  const std::size_t n = g.gens.size();
  MalcevElement r;
  r.gens.resize(n);
  r.comms.resize(g.comms.size());
  for (std::size_t i = 0; i < n; ++i) r.gens[i] = checked_add(g.gens[i], h.gens[i]);
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++idx)
      r.comms[idx] = checked_sub(checked_add(g.comms[idx], h.comms[idx]),
                                 checked_mul(g.gens[j], h.gens[i]));
  return r;
}

inline MalcevElement inverse(const MalcevElement& g) {
  const std::size_t n = g.gens.size();
  MalcevElement r;
  r.gens.resize(n);
  r.comms.resize(g.comms.size());
  for (std::size_t i = 0; i < n; ++i) r.gens[i] = checked_sub(0, g.gens[i]);
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++idx)
      r.comms[idx] = checked_sub(checked_sub(0, g.comms[idx]), checked_mul(g.gens[i], g.gens[j]));
  return r;
}

// g^m in closed form; agrees with m-fold multiplication (and with inverse
// for m = -1) because choose_two telescopes under the product law.
inline MalcevElement power(const MalcevElement& g, Coord m) {
  const std::size_t n = g.gens.size();
  const Coord pair_count = choose_two(m);
  MalcevElement r;
  r.gens.resize(n);
  r.comms.resize(g.comms.size());
  for (std::size_t i = 0; i < n; ++i) r.gens[i] = checked_mul(m, g.gens[i]);
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++idx)
      r.comms[idx] = checked_sub(checked_mul(m, g.comms[idx]),
                                 checked_mul(pair_count, checked_mul(g.gens[i], g.gens[j])));
  return r;
}

inline bool is_identity(const MalcevElement& g) {
  for (Coord a : g.gens)
    if (a != 0) return false;
  for (Coord e : g.comms)
    if (e != 0) return false;
  return true;
}

// An element is central iff it has no generator part: in class 2 the
// center of the free model is exactly the commutator subgroup.
inline bool is_central(const MalcevElement& g) {
  for (Coord a : g.gens)
    if (a != 0) return false;
  return true;
}

// [g,h] = g^-1 h^-1 g h. Central, and bilinear in the generator exponents:
// the c_ij exponent of [g,h] is a_i*b_j - a_j*b_i.
inline MalcevElement commutator(const MalcevElement& g, const MalcevElement& h) {
  check_same_shape(g, h);
  const std::size_t n = g.gens.size();
  MalcevElement r;
  r.gens.assign(n, 0);
  r.comms.resize(g.comms.size());
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++idx)
      r.comms[idx] = checked_sub(checked_mul(g.gens[i], h.gens[j]),
                                 checked_mul(g.gens[j], h.gens[i]));
  return r;
}

inline bool commutes(const MalcevElement& g, const MalcevElement& h) {
  check_same_shape(g, h);
  const std::size_t n = g.gens.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (checked_mul(g.gens[i], h.gens[j]) != checked_mul(g.gens[j], h.gens[i])) return false;
  return true;
}

// The exponent m with g = c^m, if one exists; unique by torsion-freeness.
// c may be any non-identity element. Typical use is coset decomposition
// against a central ratio c, where g = s^-1 t.
inline std::optional<Coord> central_root_exponent(const MalcevElement& g, const MalcevElement& c) {
  check_same_shape(g, c);
  if (is_identity(c)) throw std::invalid_argument("central_root_exponent: c must not be the identity");
  // candidate exponent from the first nonzero coordinate of c
  Coord m = 0;
  bool found = false;
  for (std::size_t i = 0; i < c.gens.size() && !found; ++i)
    if (c.gens[i] != 0) {
      if (g.gens[i] % c.gens[i] != 0) return std::nullopt;
      m = g.gens[i] / c.gens[i];
      found = true;
    }
  for (std::size_t i = 0; i < c.comms.size() && !found; ++i)
    if (c.comms[i] != 0) {
      if (g.comms[i] % c.comms[i] != 0) return std::nullopt;
      m = g.comms[i] / c.comms[i];
      found = true;
    }
  if (power(c, m) == g) return m;
  return std::nullopt;
}

struct ElementHash {
  std::size_t operator()(const MalcevElement& g) const {
    // FNV-1a over all coordinates
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](Coord v) {
      std::uint64_t u = static_cast<std::uint64_t>(v);
      for (int b = 0; b < 8; ++b) {
        h ^= (u >> (8 * b)) & 0xffu;
        h *= 1099511628211ull;
      }
    };
    for (Coord a : g.gens) mix(a);
    for (Coord e : g.comms) mix(e);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace nil2
