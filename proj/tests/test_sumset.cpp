#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <nil2/nil2.hpp>

using namespace nil2;

namespace {

const GroupContext& ctx2() {
  static GroupContext ctx(2);
  return ctx;
}

MalcevElement el2(Coord a1, Coord a2, Coord e) { return ctx2().element({a1, a2}, {e}); }

// independent oracle: quadratic list with linear dedupe, no hashing involved
std::vector<MalcevElement> naive_square(const Subset& s) {
  std::vector<MalcevElement> out;
  for (const auto& a : s)
    for (const auto& b : s) {
      const auto p = multiply(a, b);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

Subset make(std::vector<MalcevElement> elems) {
  return Subset::from_elements(ctx2(), std::move(elems));
}

}  // namespace

TEST_CASE("frozen squares of small sets", "[sumset]") {
  const auto x = ctx2().generator(0);
  const auto y = ctx2().generator(1);
  const auto z = ctx2().central_generator(0, 1);

  CHECK(product_set_size(make({x})) == 1);
  CHECK(product_set_size(make({x, y})) == 4);
  CHECK(product_set_size(make({x, y, z})) == 7);
  CHECK(product_set_size(make({x, y, multiply(x, y)})) == 9);
  CHECK(product_set_size(make({y, multiply(y, z), x})) == 7);
  CHECK(product_set_size(make({y, multiply(y, z), x, multiply(x, z)})) == 10);

  const auto square = product_set(make({y, multiply(y, z), x}));
  const std::vector<MalcevElement> expected = {
      el2(0, 2, 0), el2(0, 2, 1), el2(0, 2, 2), el2(1, 1, -1),
      el2(1, 1, 0), el2(1, 1, 1), el2(2, 0, 0)};
  REQUIRE(square == expected);
}

TEST_CASE("hashed square matches the naive oracle", "[sumset]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<MalcevElement> elems;
    const int k = 2 + static_cast<int>(bounded_rand(rng, 4));
    for (int t = 0; t < k; ++t) elems.push_back(random_element(rng, ctx2(), 2, 2));
    const Subset s = Subset::from_elements(ctx2(), std::move(elems));
    REQUIRE(product_set(s) == naive_square(s));
    REQUIRE(product_set_size(s) == naive_square(s).size());
  }
}

TEST_CASE("square size stays within the exact bounds", "[sumset]") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<MalcevElement> elems;
    const int k = 1 + static_cast<int>(bounded_rand(rng, 5));
    for (int t = 0; t < k; ++t) elems.push_back(random_element(rng, ctx2(), 3, 3));
    const Subset s = Subset::from_elements(ctx2(), std::move(elems));
    const std::size_t sq = product_set_size(s);
    REQUIRE(sq >= 2 * s.size() - 1);
    REQUIRE(sq <= s.size() * s.size());
  }
}

TEST_CASE("two-sided products", "[sumset]") {
  const auto x = ctx2().generator(0);
  const auto y = ctx2().generator(1);
  CHECK(two_sided_product_size({y}, {x}) == 2);  // xy != yx
  CHECK(two_sided_product_size({x}, {x}) == 1);
  // {y, yz} against {x}: products yx z^t for t in {-1,0,1}, so 3
  const auto z = ctx2().central_generator(0, 1);
  CHECK(two_sided_product_size({y, multiply(y, z)}, {x}) == 3);
}

TEST_CASE("commutation flags and central members", "[sumset]") {
  const auto x = ctx2().generator(0);
  const auto y = ctx2().generator(1);
  const auto z = ctx2().central_generator(0, 1);

  CHECK(is_pairwise_commuting(make({x, multiply(x, z), z})));
  CHECK(!is_pairwise_commuting(make({x, y})));
  CHECK(is_cna(make({x, y})));
  CHECK(!is_cna(make({x, y, z})));
  CHECK(is_cna(make({x})));

  const auto members = center_members(make({x, y, z}));
  REQUIRE(members.size() == 1);
  CHECK(members[0] == z);
  CHECK(center_members(make({x, y})).empty());
  CHECK(center_members(make({x, multiply(x, z)})).size() == 2);
}

TEST_CASE("doubling report bands and landmarks", "[sumset]") {
  const auto x = ctx2().generator(0);
  const auto y = ctx2().generator(1);
  const auto z = ctx2().central_generator(0, 1);

  const DoublingReport pair = doubling_report(make({x, y}));
  CHECK(pair.k == 2);
  CHECK(pair.square_size == 4);
  CHECK(pair.cna);
  CHECK(!pair.generated_abelian);
  CHECK(pair.band == DoublingBand::eq_3k_minus_2);
  CHECK(pair.landmark(0) == 3);
  CHECK(pair.landmark(4) == 4);

  // abelian progression of length 5: square is the minimum 2k-1
  std::vector<MalcevElement> prog{y};
  for (int t = 0; t < 4; ++t) prog.push_back(multiply(prog.back(), z));
  const DoublingReport mini = doubling_report(make(std::move(prog)));
  CHECK(mini.k == 5);
  CHECK(mini.square_size == 9);
  CHECK(mini.generated_abelian);
  CHECK(mini.band == DoublingBand::at_minimum);

  const DoublingReport seven = doubling_report(make({y, multiply(y, z), x}));
  CHECK(seven.band == DoublingBand::eq_3k_minus_2);

  const DoublingReport nine = doubling_report(make({x, y, multiply(x, y)}));
  CHECK(nine.square_size == 9);
  CHECK(nine.band == DoublingBand::ge_4k_minus_4);
}

TEST_CASE("report is invariant under conjugation", "[sumset]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<MalcevElement> elems;
    const int k = 2 + static_cast<int>(bounded_rand(rng, 4));
    for (int t = 0; t < k; ++t) elems.push_back(random_element(rng, ctx2(), 3, 3));
    const Subset s = Subset::from_elements(ctx2(), std::move(elems));
    const auto g = random_element(rng, ctx2(), 3, 3);
    const DoublingReport a = doubling_report(s);
    const DoublingReport b = doubling_report(conjugated(s, g));
    REQUIRE(a.k == b.k);
    REQUIRE(a.square_size == b.square_size);
    REQUIRE(a.generated_abelian == b.generated_abelian);
    REQUIRE(a.cna == b.cna);
    REQUIRE(a.band == b.band);
  }
}
