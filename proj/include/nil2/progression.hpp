#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "element.hpp"
#include "order.hpp"
#include "subset.hpp"
#include "sumset.hpp"

namespace nil2 {

// how the two base points interact: ba = ab c^v or ab = ba c^v
enum class ProgressionRelation { ba_eq_ab_cv, ab_eq_ba_cv };

inline const char* to_string(ProgressionRelation r) {
  return r == ProgressionRelation::ba_eq_ab_cv ? "ba_eq_ab_cv" : "ab_eq_ba_cv";
}

enum class StructureShape { two_progressions, progression_plus_point };

inline const char* to_string(StructureShape s) {
  return s == StructureShape::two_progressions ? "two_progressions" : "progression_plus_point";
}

// Normal form of a recognized small-square set: geometric progressions with
// a shared central ratio c > 1. For two_progressions the set is
// {a, ac, ..., ac^i} u {b, bc, ..., bc^j} with [b,a] = c^{±1}; for
// progression_plus_point it is {ac^e : e in exponents} u {b} where the
// occupied exponents may have holes and [b,a] = c^{±v}.
struct StructureDescription {
  StructureShape shape = StructureShape::two_progressions;
  MalcevElement a, b, c;
  Coord i = 0;
  Coord j = 0;
  Coord v = 1;
  ProgressionRelation relation = ProgressionRelation::ba_eq_ab_cv;
  std::vector<Coord> exponents;  // progression_plus_point only: occupied slots, ascending, starts at 0
  bool has_holes = false;
  bool strict = false;  // full interval of exponents and v = 1
};

namespace detail {

inline void require_valid_ratio(const MalcevElement& c) {
  if (is_identity(c)) throw std::invalid_argument("c must not be the identity");
  if (!is_central(c)) throw std::invalid_argument("c must be central");
  if (!is_positive(c)) throw std::invalid_argument("c must be positive");
}

inline std::vector<MalcevElement> ratio_progression(const MalcevElement& base,
                                                    const MalcevElement& c, Coord top) {
  std::vector<MalcevElement> out;
  out.reserve(static_cast<std::size_t>(top) + 1);
  MalcevElement cur = base;
  out.push_back(cur);
  for (Coord e = 1; e <= top; ++e) {
    cur = multiply(cur, c);
    out.push_back(cur);
  }
  return out;
}

}  // namespace detail

// {a, ac, ..., ac^i} u {b, bc, ..., bc^j} with [b,a] = c or c^-1.
// The square of the result has size exactly 3k-2 for k = i+j+2.
inline Subset construct_two_progressions(const GroupContext& ctx, const MalcevElement& a,
                                         const MalcevElement& b, const MalcevElement& c,
                                         Coord i, Coord j) {
  if (!ctx.matches(a) || !ctx.matches(b) || !ctx.matches(c))
    throw DimensionError("arguments do not match the group rank");
  if (i < 0 || j < 0) throw std::invalid_argument("i and j must be nonnegative");
  if (i + j < 1) throw std::invalid_argument("need i+j >= 1 so that k >= 3");
  detail::require_valid_ratio(c);
  const MalcevElement q = commutator(b, a);
  if (q != c && q != inverse(c))
    throw std::invalid_argument("[b,a] must equal c or c^-1");
  std::vector<MalcevElement> elems = detail::ratio_progression(a, c, i);
  const std::vector<MalcevElement> bs = detail::ratio_progression(b, c, j);
  elems.insert(elems.end(), bs.begin(), bs.end());
  Subset s = Subset::from_elements(ctx, std::move(elems));
  if (s.size() != static_cast<std::size_t>(i + j + 2))
    throw std::logic_error("progression blocks collided; engine defect");
  return s;
}

struct GeneralConstruction {
  Subset set;
  Coord v = 1;
  ProgressionRelation relation = ProgressionRelation::ba_eq_ab_cv;
  long long predicted_square = 0;  // 3(i+j+2) + v - 3
  long long predicted_union = 0;   // |AB u BA| = i + j + v + 1
  std::vector<MalcevElement> a_part;
  std::vector<MalcevElement> b_part;
};

// Same two-block shape but with [b,a] = c^{±v} for any 1 <= v <= i+j; v is
// read off from the pair (b, a) rather than passed in.
inline GeneralConstruction construct_general(const GroupContext& ctx, const MalcevElement& a,
                                             const MalcevElement& b, const MalcevElement& c,
                                             Coord i, Coord j) {
  if (!ctx.matches(a) || !ctx.matches(b) || !ctx.matches(c))
    throw DimensionError("arguments do not match the group rank");
  if (i < 0 || j < 0) throw std::invalid_argument("i and j must be nonnegative");
  if (i + j < 1) throw std::invalid_argument("need i+j >= 1 so that k >= 3");
  detail::require_valid_ratio(c);
  const MalcevElement q = commutator(b, a);
  if (is_identity(q)) throw std::invalid_argument("a and b must not commute");
  const std::optional<Coord> w = central_root_exponent(q, c);
  if (!w) throw std::invalid_argument("[b,a] is not a power of c");
  const Coord v = checked_abs(*w);
  if (v > i + j) throw std::invalid_argument("|v| must not exceed i+j");

  GeneralConstruction out{Subset::from_elements(ctx, {a}), v,
                          *w > 0 ? ProgressionRelation::ba_eq_ab_cv
                                 : ProgressionRelation::ab_eq_ba_cv,
                          0, 0, {}, {}};
  out.a_part = detail::ratio_progression(a, c, i);
  out.b_part = detail::ratio_progression(b, c, j);
  std::vector<MalcevElement> elems = out.a_part;
  elems.insert(elems.end(), out.b_part.begin(), out.b_part.end());
  out.set = Subset::from_elements(ctx, std::move(elems));
  if (out.set.size() != static_cast<std::size_t>(i + j + 2))
    throw std::logic_error("progression blocks collided; engine defect");
  out.predicted_square = 3 * static_cast<long long>(i + j + 2) + v - 3;
  out.predicted_union = static_cast<long long>(i) + j + v + 1;
  return out;
}

inline Subset reconstruct(const GroupContext& ctx, const StructureDescription& d) {
  if (d.shape == StructureShape::two_progressions)
    return construct_two_progressions(ctx, d.a, d.b, d.c, d.i, d.j);
  std::vector<MalcevElement> elems;
  for (Coord e : d.exponents) elems.push_back(multiply(d.a, power(d.c, e)));
  elems.push_back(d.b);
  return Subset::from_elements(ctx, std::move(elems));
}

namespace detail {

// Partition of S into cosets of <c>, attempted greedily in ascending order.
// Bases are the first (smallest) member of each coset; exponents are taken
// relative to the base and are positive because c > 1.
struct CosetClass {
  MalcevElement base;
  std::vector<Coord> exponents;  // includes 0 for the base itself
};

inline bool split_into_two_cosets(const Subset& s, const MalcevElement& c,
                                  std::vector<CosetClass>& classes) {
  classes.clear();
  for (const auto& g : s) {
    bool placed = false;
    for (auto& cls : classes) {
      const auto e = central_root_exponent(multiply(inverse(cls.base), g), c);
      if (e) {
        cls.exponents.push_back(*e);
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (classes.size() == 2) return false;
      classes.push_back(CosetClass{g, {0}});
    }
  }
  return classes.size() == 2;
}

inline bool is_full_interval(std::vector<Coord> exps) {
  std::sort(exps.begin(), exps.end());
  for (std::size_t t = 0; t < exps.size(); ++t)
    if (exps[t] != static_cast<Coord>(t)) return false;
  return true;
}

}  // namespace detail

// Decide whether S is exactly {a,...,ac^i} u {b,...,bc^j} with [b,a] = c^{±1}
// and return the canonical description (a = min S, c > 1) if so. Candidate
// ratios are the positive central quotients s^-1 t over distinct s, t in S,
// tried in ascending order; the first one that works wins.
inline std::optional<StructureDescription> recognize_structure(const Subset& s) {
  if (s.size() < 3) throw std::invalid_argument("recognize_structure needs |S| >= 3");
  std::vector<MalcevElement> candidates;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (x == y) continue;
      MalcevElement q = multiply(inverse(s[x]), s[y]);
      if (is_central(q) && is_positive(q)) candidates.push_back(std::move(q));
    }
  candidates = sorted_unique(std::move(candidates));

  std::vector<detail::CosetClass> classes;
  for (const auto& c : candidates) {
    if (!detail::split_into_two_cosets(s, c, classes)) continue;
    if (!detail::is_full_interval(classes[0].exponents) ||
        !detail::is_full_interval(classes[1].exponents))
      continue;
    const MalcevElement& a = classes[0].base;  // class of min S, so a = min S
    const MalcevElement& b = classes[1].base;
    const MalcevElement q = commutator(b, a);
    ProgressionRelation rel;
    if (q == c)
      rel = ProgressionRelation::ba_eq_ab_cv;
    else if (q == inverse(c))
      rel = ProgressionRelation::ab_eq_ba_cv;
    else
      continue;
    StructureDescription d;
    d.shape = StructureShape::two_progressions;
    d.a = a;
    d.b = b;
    d.c = c;
    d.i = static_cast<Coord>(classes[0].exponents.size()) - 1;
    d.j = static_cast<Coord>(classes[1].exponents.size()) - 1;
    d.v = 1;
    d.relation = rel;
    d.has_holes = false;
    d.strict = true;
    return d;
  }
  return std::nullopt;
}

namespace detail {

// multiplier lambda with u = lambda * p for a primitive p, if any
inline std::optional<Coord> multiplier_along(const std::vector<Coord>& u,
                                             const std::vector<Coord>& p) {
  std::size_t t = 0;
  while (t < p.size() && p[t] == 0) ++t;
  if (t == p.size()) return std::nullopt;
  if (u[t] % p[t] != 0) return std::nullopt;
  const Coord lambda = u[t] / p[t];
  for (std::size_t x = 0; x < p.size(); ++x)
    if (u[x] != checked_mul(lambda, p[x])) return std::nullopt;
  return lambda;
}

}  // namespace detail

// Decide whether S = A u {b} where A lies on a progression {a c^e} with a
// shared central ratio and b fails to commute with A's base. The ratio is
// not searched among quotients: it is the generator of the smallest cyclic
// group containing all quotient directions and [b,a], which keeps v and the
// spanning exponent minimal and also handles progressions with holes.
inline std::optional<StructureDescription> recognize_progression_plus_point(const Subset& s) {
  if (s.size() < 4) throw std::invalid_argument("recognize_progression_plus_point needs |S| >= 4");
  const std::size_t k = s.size();
  for (std::size_t bi = 0; bi < k; ++bi) {
    const MalcevElement& b = s[bi];
    std::vector<const MalcevElement*> a_part;
    for (std::size_t t = 0; t < k; ++t)
      if (t != bi) a_part.push_back(&s[t]);
    const MalcevElement& base = *a_part[0];

    std::vector<std::vector<Coord>> dirs;
    bool ok = true;
    for (std::size_t t = 1; t < a_part.size() && ok; ++t) {
      MalcevElement q = multiply(inverse(base), *a_part[t]);
      if (!is_central(q)) ok = false;
      else dirs.push_back(std::move(q.comms));
    }
    if (!ok) continue;
    MalcevElement w = commutator(b, base);
    if (is_identity(w)) continue;
    dirs.push_back(w.comms);

    // primitive direction of the first quotient, oriented positive
    std::vector<Coord> p = dirs.front();
    Coord g0 = 0;
    for (Coord x : p) g0 = std::gcd(g0, checked_abs(x));
    for (Coord& x : p) x /= g0;
    for (Coord x : p) {
      if (x == 0) continue;
      if (x < 0)
        for (Coord& y : p) y = checked_neg(y);
      break;
    }

    std::vector<Coord> lambdas;
    lambdas.reserve(dirs.size());
    for (const auto& u : dirs) {
      const auto lambda = detail::multiplier_along(u, p);
      if (!lambda) { ok = false; break; }
      lambdas.push_back(*lambda);
    }
    if (!ok) continue;

    Coord g = 0;
    for (Coord l : lambdas) g = std::gcd(g, checked_abs(l));
    const Coord w_exp = lambdas.back() / g;
    if (w_exp == 0) throw std::logic_error("zero base commutator survived; engine defect");

    StructureDescription d;
    d.shape = StructureShape::progression_plus_point;
    d.a = base;
    d.b = b;
    d.c = MalcevElement{std::vector<Coord>(base.gens.size(), 0), p};
    for (Coord& x : d.c.comms) x = checked_mul(x, g);
    d.exponents.push_back(0);
    for (std::size_t t = 0; t + 1 < lambdas.size(); ++t) {
      const Coord e = lambdas[t] / g;
      if (e <= 0) throw std::logic_error("nonpositive progression exponent; engine defect");
      d.exponents.push_back(e);
    }
    std::sort(d.exponents.begin(), d.exponents.end());
    d.i = d.exponents.back();
    d.j = 0;
    d.v = checked_abs(w_exp);
    d.relation = w_exp > 0 ? ProgressionRelation::ba_eq_ab_cv : ProgressionRelation::ab_eq_ba_cv;
    d.has_holes = d.i != static_cast<Coord>(a_part.size()) - 1;
    d.strict = !d.has_holes && d.v == 1;
    return d;
  }
  return std::nullopt;
}

enum class K3Case { central_element, two_progressions, not_extremal };

inline const char* to_string(K3Case c) {
  switch (c) {
    case K3Case::central_element: return "central_element";
    case K3Case::two_progressions: return "two_progressions";
    case K3Case::not_extremal: return "not_extremal";
  }
  return "?";
}

struct K3Classification {
  K3Case kind = K3Case::not_extremal;
  std::optional<StructureDescription> description;
  std::vector<MalcevElement> central_members;  // S ∩ Z(<S>) for the central case
};

// Trichotomy for 3-element sets: a member central in <S>, or the
// two-progression shape, or neither (and then |S^2| > 7 when <S> is
// non-abelian).
inline K3Classification classify_k3(const Subset& s) {
  if (s.size() != 3) throw std::invalid_argument("classify_k3 needs |S| = 3");
  K3Classification out;
  out.central_members = center_members(s);
  if (!out.central_members.empty()) {
    out.kind = K3Case::central_element;
    return out;
  }
  out.description = recognize_structure(s);
  if (out.description) {
    out.kind = K3Case::two_progressions;
    return out;
  }
  out.kind = K3Case::not_extremal;
  return out;
}

}  // namespace nil2
