#pragma once

#include <chrono>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "enumerate.hpp"
#include "progression.hpp"
#include "subset.hpp"
#include "sumset.hpp"
#include "textform.hpp"

namespace nil2 {

// Statements the engine can test. The short ids double as CLI names.
//   L2_1   dropping the top element when the top pair fails to commute
//          shrinks the square by at least 4
//   P2_2   completely non-abelian sets have |S^2| >= 4k-4
//   L2_3   square and union sizes of a progression plus a point (j = 0 grid)
//   L2_4   square and union sizes of two progressions, general v
//   T2_5   k >= 4, <S \ max> abelian, <S> non-abelian, |S^2| <= 4k-6 forces
//          a progression-plus-point presentation with bounded v and span
//   E3_1   the two-progression family realizes |S^2| = 3k-2 for every split
//   T3_2   |S^2| = 3k-2 with <S> non-abelian iff the two-progression shape
//   P3_3   k = 3, <S> non-abelian: |S^2| = 7 iff central member or progression
//   P3_4   k >= 4 extremal sets with an abelian (k-1)-subset are strict
//          progression-plus-point
//   BG_1_3 |S^2| <= 3k-3 forces <S> abelian
enum class TheoremId { L2_1, P2_2, L2_3, L2_4, T2_5, E3_1, T3_2, P3_3, P3_4, BG_1_3 };

inline const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::L2_1: return "L2_1";
    case TheoremId::P2_2: return "P2_2";
    case TheoremId::L2_3: return "L2_3";
    case TheoremId::L2_4: return "L2_4";
    case TheoremId::T2_5: return "T2_5";
    case TheoremId::E3_1: return "E3_1";
    case TheoremId::T3_2: return "T3_2";
    case TheoremId::P3_3: return "P3_3";
    case TheoremId::P3_4: return "P3_4";
    case TheoremId::BG_1_3: return "BG_1_3";
  }
  return "?";
}

inline std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (TheoremId id : {TheoremId::L2_1, TheoremId::P2_2, TheoremId::L2_3, TheoremId::L2_4,
                       TheoremId::T2_5, TheoremId::E3_1, TheoremId::T3_2, TheoremId::P3_3,
                       TheoremId::P3_4, TheoremId::BG_1_3})
    if (name == to_string(id)) return id;
  return std::nullopt;
}

struct Counterexample {
  std::uint64_t ordinal = 0;
  std::vector<std::string> subset;  // element text forms, ascending
  std::string detail;
};

inline constexpr std::size_t kCounterexampleCap = 16;

struct VerificationReport {
  TheoremId theorem = TheoremId::L2_1;
  EnumerationMode mode = EnumerationMode::exhaustive;
  std::uint64_t instances_checked = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // first kCounterexampleCap, by (ordinal, detail)
  std::vector<OrderDirection> directions;
  double elapsed_seconds = 0.0;

  bool vacuous() const { return hypothesis_hits == 0; }
  bool passed() const { return counterexample_count == 0 && !vacuous(); }
  const char* status() const {
    return counterexample_count ? "fail" : (vacuous() ? "vacuous" : "pass");
  }
  // 0 = verified, 1 = counterexample found, 3 = hypotheses never held
  int exit_code() const { return counterexample_count ? 1 : (vacuous() ? 3 : 0); }
};

namespace detail {

struct Accum {
  std::uint64_t checked = 0;
  std::uint64_t hits = 0;
  std::uint64_t ce_count = 0;
  std::vector<Counterexample> ces;

  void hit() { ++hits; }

  void fail(std::uint64_t ordinal, const Subset& s, std::string detail_text) {
    ++ce_count;
    if (ces.size() >= kCounterexampleCap) return;
    Counterexample ce;
    ce.ordinal = ordinal;
    ce.subset.reserve(s.size());
    for (const auto& g : s) ce.subset.push_back(to_text(g));
    ce.detail = std::move(detail_text);
    ces.push_back(std::move(ce));
  }
};

inline void merge_into_report(VerificationReport& report, std::vector<Accum>& accs) {
  std::vector<Counterexample> all;
  for (auto& a : accs) {
    report.instances_checked += a.checked;
    report.hypothesis_hits += a.hits;
    report.counterexample_count += a.ce_count;
    for (auto& ce : a.ces) all.push_back(std::move(ce));
  }
  std::sort(all.begin(), all.end(), [](const Counterexample& x, const Counterexample& y) {
    return x.ordinal != y.ordinal ? x.ordinal < y.ordinal : x.detail < y.detail;
  });
  if (all.size() > kCounterexampleCap) all.resize(kCounterexampleCap);
  report.counterexamples = std::move(all);
}

inline std::size_t max_index(const Subset& s, OrderDirection dir) {
  return dir == OrderDirection::standard ? s.size() - 1 : 0;
}

inline std::size_t second_index(const Subset& s, OrderDirection dir) {
  return dir == OrderDirection::standard ? s.size() - 2 : 1;
}

inline const char* direction_name(OrderDirection dir) {
  return dir == OrderDirection::standard ? "standard" : "reversed";
}

using Dirs = std::vector<OrderDirection>;

inline void check_growth_step(const Subset& s, std::uint64_t ord, const Dirs& dirs, Accum& acc) {
  const long long k = static_cast<long long>(s.size());
  if (k < 3) return;
  const long long sq = static_cast<long long>(product_set_size(s));
  for (OrderDirection dir : dirs) {
    const MalcevElement& top = s[max_index(s, dir)];
    const MalcevElement& next = s[second_index(s, dir)];
    if (commutes(top, next)) continue;
    acc.hit();
    const Subset t = s.without_index(max_index(s, dir));
    const long long sq_t = static_cast<long long>(product_set_size(t));
    if (sq < sq_t + 4)
      acc.fail(ord, s,
               std::string("|S^2| = ") + std::to_string(sq) + " < |T^2|+4 = " +
                   std::to_string(sq_t + 4) + " with direction=" + direction_name(dir));
    if (!is_pairwise_commuting(t) && sq < 3 * k - 1)
      acc.fail(ord, s,
               std::string("|S^2| = ") + std::to_string(sq) + " < 3k-1 = " +
                   std::to_string(3 * k - 1) + " with <T> non-abelian, direction=" +
                   direction_name(dir));
  }
}

inline void check_cna_bound(const Subset& s, std::uint64_t ord, const Dirs&, Accum& acc) {
  if (!is_cna(s)) return;
  acc.hit();
  const long long k = static_cast<long long>(s.size());
  const long long sq = static_cast<long long>(product_set_size(s));
  if (sq < 4 * k - 4)
    acc.fail(ord, s,
             "completely non-abelian but |S^2| = " + std::to_string(sq) + " < 4k-4 = " +
                 std::to_string(4 * k - 4));
}

inline void check_abelian_floor(const Subset& s, std::uint64_t ord, const Dirs&, Accum& acc) {
  const long long k = static_cast<long long>(s.size());
  if (k < 2) return;
  const long long sq = static_cast<long long>(product_set_size(s));
  if (sq > 3 * k - 3) return;
  acc.hit();
  if (!is_pairwise_commuting(s))
    acc.fail(ord, s, "<S> non-abelian although |S^2| = " + std::to_string(sq) +
                         " <= 3k-3 = " + std::to_string(3 * k - 3));
}

inline void check_extremal_iff_structure(const Subset& s, std::uint64_t ord, const Dirs&,
                                         Accum& acc) {
  const long long k = static_cast<long long>(s.size());
  if (k < 4) return;
  if (is_pairwise_commuting(s)) return;
  acc.hit();
  const long long sq = static_cast<long long>(product_set_size(s));
  const auto r = recognize_structure(s);
  const bool extremal = sq == 3 * k - 2;
  if (r && !extremal)
    acc.fail(ord, s, "recognized two-progression form but |S^2| = " + std::to_string(sq) +
                         " != 3k-2 = " + std::to_string(3 * k - 2));
  if (!r && extremal)
    acc.fail(ord, s, "|S^2| = 3k-2 = " + std::to_string(sq) + " but no two-progression form");
  if (r && r->v != 1)
    acc.fail(ord, s, "recognized form has v = " + std::to_string(r->v) + " instead of 1");
}

inline void check_k3_square_seven(const Subset& s, std::uint64_t ord, const Dirs&, Accum& acc) {
  if (s.size() != 3) return;
  if (is_pairwise_commuting(s)) return;
  acc.hit();
  const long long sq = static_cast<long long>(product_set_size(s));
  const K3Classification cls = classify_k3(s);
  const bool structured = cls.kind != K3Case::not_extremal;
  if ((sq == 7) != structured) {
    if (structured)
      acc.fail(ord, s, std::string("classified as ") + to_string(cls.kind) + " but |S^2| = " +
                           std::to_string(sq) + " != 7");
    else
      acc.fail(ord, s, "|S^2| = 7 but neither a central member nor a progression pair");
  }
}

inline void check_extremal_with_abelian_part(const Subset& s, std::uint64_t ord, const Dirs&,
                                             Accum& acc) {
  const long long k = static_cast<long long>(s.size());
  if (k < 4) return;
  if (is_pairwise_commuting(s)) return;
  const long long sq = static_cast<long long>(product_set_size(s));
  if (sq != 3 * k - 2) return;
  bool has_abelian_part = false;
  for (std::size_t t = 0; t < s.size() && !has_abelian_part; ++t)
    if (is_pairwise_commuting(s.without_index(t))) has_abelian_part = true;
  if (!has_abelian_part) return;
  acc.hit();
  const auto r = recognize_progression_plus_point(s);
  if (!r) {
    acc.fail(ord, s, "no progression-plus-point presentation");
    return;
  }
  if (!r->strict)
    acc.fail(ord, s,
             "presentation not strict: v = " + std::to_string(r->v) +
                 (r->has_holes ? ", holes present" : ""));
}

inline void check_small_square_structure(const Subset& s, std::uint64_t ord, const Dirs& dirs,
                                         Accum& acc) {
  const long long k = static_cast<long long>(s.size());
  if (k < 4) return;
  if (is_pairwise_commuting(s)) return;
  const long long sq = static_cast<long long>(product_set_size(s));
  if (sq > 4 * k - 6) return;
  for (OrderDirection dir : dirs) {
    const Subset t = s.without_index(max_index(s, dir));
    if (!is_pairwise_commuting(t)) continue;
    acc.hit();
    const auto r = recognize_progression_plus_point(s);
    if (!r) {
      acc.fail(ord, s,
               std::string("no progression-plus-point presentation, direction=") +
                   direction_name(dir));
      continue;
    }
    const long long excess = sq - 3 * k;  // |S^2| = 3k + excess
    if (r->v > k + excess)
      acc.fail(ord, s, "v = " + std::to_string(r->v) + " exceeds k+i = " +
                           std::to_string(k + excess) + ", direction=" + direction_name(dir));
    if (r->i > 2 * k - 6)
      acc.fail(ord, s, "spanning exponent " + std::to_string(r->i) + " exceeds 2k-6 = " +
                           std::to_string(2 * k - 6) + ", direction=" + direction_name(dir));
  }
}

using SubsetCheck = void (*)(const Subset&, std::uint64_t, const Dirs&, Accum&);

inline SubsetCheck subset_check_for(TheoremId id) {
  switch (id) {
    case TheoremId::L2_1: return &check_growth_step;
    case TheoremId::P2_2: return &check_cna_bound;
    case TheoremId::T2_5: return &check_small_square_structure;
    case TheoremId::T3_2: return &check_extremal_iff_structure;
    case TheoremId::P3_3: return &check_k3_square_seven;
    case TheoremId::P3_4: return &check_extremal_with_abelian_part;
    case TheoremId::BG_1_3: return &check_abelian_floor;
    default: return nullptr;
  }
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Run one statement's check over every subset the box yields. Workers take
// the ordinals congruent to their index, so reports are identical for any
// job count (elapsed_seconds aside).
inline VerificationReport sweep_box(TheoremId id, const BoxSpec& box, EnumerationMode mode,
                                    const std::vector<OrderDirection>& dirs, int jobs = 1) {
  const detail::SubsetCheck check = detail::subset_check_for(id);
  if (!check) throw std::invalid_argument("theorem has no subset-sweep form");
  detail::Stopwatch clock;
  const unsigned stride = jobs < 1 ? 1u : static_cast<unsigned>(jobs);
  std::vector<detail::Accum> accs(stride);
  if (stride == 1) {
    for_each_subset(box, mode, [&](std::uint64_t ord, const Subset& s) {
      ++accs[0].checked;
      check(s, ord, dirs, accs[0]);
    });
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(stride);
    for (unsigned w = 0; w < stride; ++w)
      threads.emplace_back([&, w] {
        try {
          for_each_subset_stride(box, mode, w, stride, [&](std::uint64_t ord, const Subset& s) {
            ++accs[w].checked;
            check(s, ord, dirs, accs[w]);
          });
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  VerificationReport report;
  report.theorem = id;
  report.mode = mode;
  report.directions = dirs;
  detail::merge_into_report(report, accs);
  report.elapsed_seconds = clock.seconds();
  return report;
}

// Same checks over an explicit list of subsets (ordinal = list position).
inline VerificationReport verify_on_family(TheoremId id, const std::vector<Subset>& family,
                                           const std::vector<OrderDirection>& dirs) {
  const detail::SubsetCheck check = detail::subset_check_for(id);
  if (!check) throw std::invalid_argument("theorem has no subset-sweep form");
  detail::Stopwatch clock;
  std::vector<detail::Accum> accs(1);
  for (std::size_t t = 0; t < family.size(); ++t) {
    ++accs[0].checked;
    check(family[t], static_cast<std::uint64_t>(t), dirs, accs[0]);
  }
  VerificationReport report;
  report.theorem = id;
  report.mode = EnumerationMode::exhaustive;
  report.directions = dirs;
  detail::merge_into_report(report, accs);
  report.elapsed_seconds = clock.seconds();
  return report;
}

inline VerificationReport verify_lemma_2_1(const BoxSpec& box, EnumerationMode mode,
                                           const std::vector<OrderDirection>& dirs, int jobs = 1) {
  if (box.subset_size < 3) throw std::invalid_argument("L2_1 needs subsets of size >= 3");
  return sweep_box(TheoremId::L2_1, box, mode, dirs, jobs);
}

inline VerificationReport verify_prop_2_2(const BoxSpec& box, EnumerationMode mode, int jobs = 1) {
  return sweep_box(TheoremId::P2_2, box, mode, {OrderDirection::standard}, jobs);
}

inline VerificationReport verify_thm_2_5(const BoxSpec& box, EnumerationMode mode,
                                         const std::vector<OrderDirection>& dirs, int jobs = 1) {
  return sweep_box(TheoremId::T2_5, box, mode, dirs, jobs);
}

inline VerificationReport verify_thm_3_2(const BoxSpec& box, EnumerationMode mode, int jobs = 1) {
  return sweep_box(TheoremId::T3_2, box, mode, {OrderDirection::standard}, jobs);
}

inline VerificationReport verify_prop_3_3(const BoxSpec& box, EnumerationMode mode, int jobs = 1) {
  return sweep_box(TheoremId::P3_3, box, mode, {OrderDirection::standard}, jobs);
}

inline VerificationReport verify_prop_3_4(const BoxSpec& box, EnumerationMode mode, int jobs = 1) {
  return sweep_box(TheoremId::P3_4, box, mode, {OrderDirection::standard}, jobs);
}

inline VerificationReport verify_background_1_3(const BoxSpec& box, EnumerationMode mode,
                                                int jobs = 1) {
  return sweep_box(TheoremId::BG_1_3, box, mode, {OrderDirection::standard}, jobs);
}

// x^v against y realizes [b,a] = c^v over the grid i <= imax, j <= jmax
// (j = 0 only for L2_3), checking both |S^2| = 3k+v-3 and |AB u BA| = i+j+v+1.
inline VerificationReport verify_lemmas_2_3_2_4(TheoremId id, Coord imax = 6, Coord jmax = 6) {
  if (id != TheoremId::L2_3 && id != TheoremId::L2_4)
    throw std::invalid_argument("grid verifier covers L2_3 and L2_4 only");
  detail::Stopwatch clock;
  const GroupContext ctx(2);
  const MalcevElement a = ctx.generator(1);          // y
  const MalcevElement x = ctx.generator(0);          // x
  const MalcevElement c = ctx.central_generator(0, 1);  // z = [x,y]
  std::vector<detail::Accum> accs(1);
  detail::Accum& acc = accs[0];
  std::uint64_t ordinal = 0;
  for (Coord i = 0; i <= imax; ++i) {
    const Coord jtop = id == TheoremId::L2_3 ? 0 : jmax;
    for (Coord j = 0; j <= jtop; ++j) {
      if (i + j < 1) continue;
      for (Coord v = 1; v <= i + j; ++v) {
        ++acc.checked;
        const std::uint64_t ord = ordinal++;
        const MalcevElement b = power(x, v);  // [b, a] = c^v
        const GeneralConstruction built = construct_general(ctx, a, b, c, i, j);
        acc.hit();
        const std::string where = " at i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                  " v=" + std::to_string(v);
        if (built.v != v) {
          acc.fail(ord, built.set, "construction read v = " + std::to_string(built.v) + where);
          continue;
        }
        const long long sq = static_cast<long long>(product_set_size(built.set));
        if (sq != built.predicted_square)
          acc.fail(ord, built.set,
                   "|S^2| = " + std::to_string(sq) + " != 3k+v-3 = " +
                       std::to_string(built.predicted_square) + where);
        const long long uni =
            static_cast<long long>(two_sided_product_size(built.a_part, built.b_part));
        if (uni != built.predicted_union)
          acc.fail(ord, built.set,
                   "|AB u BA| = " + std::to_string(uni) + " != i+j+v+1 = " +
                       std::to_string(built.predicted_union) + where);
      }
    }
  }
  VerificationReport report;
  report.theorem = id;
  report.mode = EnumerationMode::exhaustive;
  report.directions = {OrderDirection::standard};
  detail::merge_into_report(report, accs);
  report.elapsed_seconds = clock.seconds();
  return report;
}

// every split i+j = k-2 of the canonical pair (a = y, b = x, c = z) hits
// the extremal square size 3k-2 exactly
inline VerificationReport verify_example_3_1(int kmin = 4, int kmax = 12) {
  if (kmin < 3 || kmax < kmin) throw std::invalid_argument("need 3 <= kmin <= kmax");
  detail::Stopwatch clock;
  const GroupContext ctx(2);
  const MalcevElement a = ctx.generator(1);
  const MalcevElement b = ctx.generator(0);
  const MalcevElement c = ctx.central_generator(0, 1);
  std::vector<detail::Accum> accs(1);
  detail::Accum& acc = accs[0];
  std::uint64_t ordinal = 0;
  for (int k = kmin; k <= kmax; ++k) {
    for (Coord i = 0; i <= static_cast<Coord>(k) - 2; ++i) {
      const Coord j = static_cast<Coord>(k) - 2 - i;
      ++acc.checked;
      const std::uint64_t ord = ordinal++;
      const Subset s = construct_two_progressions(ctx, a, b, c, i, j);
      acc.hit();
      const long long sq = static_cast<long long>(product_set_size(s));
      if (sq != 3LL * k - 2)
        acc.fail(ord, s,
                 "|S^2| = " + std::to_string(sq) + " != 3k-2 = " + std::to_string(3 * k - 2) +
                     " at k=" + std::to_string(k) + " i=" + std::to_string(i) +
                     " j=" + std::to_string(j));
    }
  }
  VerificationReport report;
  report.theorem = TheoremId::E3_1;
  report.mode = EnumerationMode::exhaustive;
  report.directions = {OrderDirection::standard};
  detail::merge_into_report(report, accs);
  report.elapsed_seconds = clock.seconds();
  return report;
}

}  // namespace nil2
