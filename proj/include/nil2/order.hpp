#pragma once

#include <algorithm>
#include <vector>

#include "element.hpp"

namespace nil2 {

enum class OrderDirection { standard, reversed };

enum class Comparison { LT, EQ, GT };

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::LT: return "LT";
    case Comparison::EQ: return "EQ";
    case Comparison::GT: return "GT";
  }
  return "?";
}

// Positive cone of the bi-order: lexicographically positive generator
// exponents, or, for central elements, lexicographically positive
// commutator exponents. The cone is closed under products and under
// conjugation, so the induced order is invariant on both sides.
inline bool is_positive(const MalcevElement& g) {
  for (Coord a : g.gens) {
    if (a > 0) return true;
    if (a < 0) return false;
  }
  for (Coord e : g.comms) {
    if (e > 0) return true;
    if (e < 0) return false;
  }
  return false;
}

// g < h iff g^-1 h is positive. When the generator exponents of g and h
// agree, the collection term of the product law cancels, so the relation
// collapses to plain lexicographic comparison of the coordinate vectors.
inline bool element_less(const MalcevElement& g, const MalcevElement& h) {
  check_same_shape(g, h);
  return std::lexicographical_compare(g.gens.begin(), g.gens.end(), h.gens.begin(), h.gens.end()) ||
         (g.gens == h.gens &&
          std::lexicographical_compare(g.comms.begin(), g.comms.end(), h.comms.begin(), h.comms.end()));
}

inline Comparison compare(const MalcevElement& g, const MalcevElement& h,
                          OrderDirection dir = OrderDirection::standard) {
  if (g == h) return Comparison::EQ;
  const bool lt = element_less(g, h);
  if (dir == OrderDirection::reversed) return lt ? Comparison::GT : Comparison::LT;
  return lt ? Comparison::LT : Comparison::GT;
}

inline std::vector<MalcevElement> sorted_unique(std::vector<MalcevElement> elems) {
  std::sort(elems.begin(), elems.end(), element_less);
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

}  // namespace nil2
