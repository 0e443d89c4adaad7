#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "element.hpp"
#include "order.hpp"
#include "subset.hpp"

namespace nil2 {

using ElementSet = std::unordered_set<MalcevElement, ElementHash>;

inline std::size_t product_set_size(const Subset& s) {
  ElementSet prods;
  prods.reserve(s.size() * s.size());
  for (const auto& a : s)
    for (const auto& b : s) prods.insert(multiply(a, b));
  return prods.size();
}

// S*S as a sorted vector (ascending, standard order)
inline std::vector<MalcevElement> product_set(const Subset& s) {
  ElementSet prods;
  prods.reserve(s.size() * s.size());
  for (const auto& a : s)
    for (const auto& b : s) prods.insert(multiply(a, b));
  std::vector<MalcevElement> out(prods.begin(), prods.end());
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

// |AB u BA| for two element lists
inline std::size_t two_sided_product_size(const std::vector<MalcevElement>& a,
                                          const std::vector<MalcevElement>& b) {
  ElementSet prods;
  prods.reserve(2 * a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      prods.insert(multiply(x, y));
      prods.insert(multiply(y, x));
    }
  return prods.size();
}

inline bool is_pairwise_commuting(const Subset& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!commutes(s[i], s[j])) return false;
  return true;
}

// completely non-abelian: no two distinct members commute
inline bool is_cna(const Subset& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (commutes(s[i], s[j])) return false;
  return true;
}

// members of S lying in the center of <S>, i.e. commuting with all of S
inline std::vector<MalcevElement> center_members(const Subset& s) {
  std::vector<MalcevElement> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool central = true;
    for (std::size_t j = 0; j < s.size() && central; ++j)
      if (!commutes(s[i], s[j])) central = false;
    if (central) out.push_back(s[i]);
  }
  return out;
}

// Position of |S^2| against the landmark sizes 2k-1, 3k-3, 3k-2, 3k-1 and
// 4k-4. For tiny k the landmarks collide; the first matching band in the
// declaration order below wins.
enum class DoublingBand {
  at_minimum,            // |S^2| = 2k-1
  le_3k_minus_3,         // 2k-1 < |S^2| <= 3k-3
  eq_3k_minus_2,
  eq_3k_minus_1,
  between_3k_and_4k_minus_5,
  ge_4k_minus_4,
};

inline const char* to_string(DoublingBand b) {
  switch (b) {
    case DoublingBand::at_minimum: return "at_minimum";
    case DoublingBand::le_3k_minus_3: return "le_3k_minus_3";
    case DoublingBand::eq_3k_minus_2: return "eq_3k_minus_2";
    case DoublingBand::eq_3k_minus_1: return "eq_3k_minus_1";
    case DoublingBand::between_3k_and_4k_minus_5: return "between_3k_and_4k_minus_5";
    case DoublingBand::ge_4k_minus_4: return "ge_4k_minus_4";
  }
  return "?";
}

struct DoublingReport {
  std::size_t k = 0;
  std::size_t square_size = 0;
  bool generated_abelian = false;  // <S> abelian, i.e. S pairwise commuting
  bool cna = false;
  DoublingBand band = DoublingBand::at_minimum;

  long long landmark(int which) const {
    const long long kk = static_cast<long long>(k);
    switch (which) {
      case 0: return 2 * kk - 1;
      case 1: return 3 * kk - 3;
      case 2: return 3 * kk - 2;
      case 3: return 3 * kk - 1;
      case 4: return 4 * kk - 4;
    }
    throw std::invalid_argument("landmark index");
  }
};

inline DoublingReport doubling_report(const Subset& s) {
  DoublingReport r;
  r.k = s.size();
  r.square_size = product_set_size(s);
  r.generated_abelian = is_pairwise_commuting(s);
  r.cna = is_cna(s);
  const long long sq = static_cast<long long>(r.square_size);
  const long long kk = static_cast<long long>(r.k);
  // in a bi-ordered group the square of a k-set never drops below 2k-1
  if (sq < 2 * kk - 1 || sq > kk * kk)
    throw std::logic_error("square size outside [2k-1, k^2]; engine defect");
  if (sq == 2 * kk - 1)
    r.band = DoublingBand::at_minimum;
  else if (sq <= 3 * kk - 3)
    r.band = DoublingBand::le_3k_minus_3;
  else if (sq == 3 * kk - 2)
    r.band = DoublingBand::eq_3k_minus_2;
  else if (sq == 3 * kk - 1)
    r.band = DoublingBand::eq_3k_minus_1;
  else if (sq < 4 * kk - 4)
    r.band = DoublingBand::between_3k_and_4k_minus_5;
  else
    r.band = DoublingBand::ge_4k_minus_4;
  return r;
}

}  // namespace nil2
