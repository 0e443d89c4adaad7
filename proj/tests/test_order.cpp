#include <catch2/catch_amalgamated.hpp>

#include <nil2/nil2.hpp>

using namespace nil2;

namespace {

const GroupContext& ctx2() {
  static GroupContext ctx(2);
  return ctx;
}

MalcevElement el2(Coord a1, Coord a2, Coord e) { return ctx2().element({a1, a2}, {e}); }

std::vector<MalcevElement> small_box2() {
  BoxSpec box;
  box.generators = 2;
  box.gen_bound = 1;
  box.comm_bound = 1;
  return box_universe(box);
}

}  // namespace

TEST_CASE("positivity of the basic elements", "[order]") {
  CHECK(is_positive(ctx2().generator(0)));
  CHECK(is_positive(ctx2().generator(1)));
  CHECK(is_positive(ctx2().central_generator(0, 1)));
  CHECK(!is_positive(ctx2().identity()));
  CHECK(!is_positive(inverse(ctx2().generator(0))));
  CHECK(is_positive(el2(0, 1, -7)));   // first nonzero generator exponent decides
  CHECK(!is_positive(el2(0, -1, 9)));
  CHECK(is_positive(el2(0, 0, 3)));
  CHECK(!is_positive(el2(0, 0, -3)));
}

TEST_CASE("compare agrees with the positivity definition", "[order]") {
  // g < h iff g^-1 h is positive; the lexicographic shortcut must agree
  for (const auto& g : small_box2())
    for (const auto& h : small_box2()) {
      const bool def_lt = is_positive(multiply(inverse(g), h));
      REQUIRE((compare(g, h) == Comparison::LT) == def_lt);
      REQUIRE((compare(g, h) == Comparison::EQ) == (g == h));
    }
}

TEST_CASE("frozen comparisons", "[order]") {
  const auto x = ctx2().generator(0);
  const auto y = ctx2().generator(1);
  CHECK(compare(y, x) == Comparison::LT);
  CHECK(compare(x, y) == Comparison::GT);
  CHECK(compare(x, x) == Comparison::EQ);
  CHECK(compare(y, x, OrderDirection::reversed) == Comparison::GT);
  CHECK(to_string(compare(y, x)) == std::string("LT"));
}

TEST_CASE("trichotomy and transitivity", "[order]") {
  const auto box = small_box2();
  for (const auto& g : box)
    for (const auto& h : box) {
      int count = (compare(g, h) == Comparison::LT) + (compare(g, h) == Comparison::EQ) +
                  (compare(g, h) == Comparison::GT);
      REQUIRE(count == 1);
    }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4000; ++trial) {
    const auto g = random_element(rng, ctx2(), 3, 3);
    const auto h = random_element(rng, ctx2(), 3, 3);
    const auto f = random_element(rng, ctx2(), 3, 3);
    if (compare(g, h) == Comparison::LT && compare(h, f) == Comparison::LT)
      REQUIRE(compare(g, f) == Comparison::LT);
  }
}

TEST_CASE("order is invariant on both sides", "[order]") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto g = random_element(rng, ctx2(), 4, 4);
    const auto h = random_element(rng, ctx2(), 4, 4);
    const auto f = random_element(rng, ctx2(), 4, 4);
    if (compare(g, h) != Comparison::LT) continue;
    REQUIRE(compare(multiply(f, g), multiply(f, h)) == Comparison::LT);
    REQUIRE(compare(multiply(g, f), multiply(h, f)) == Comparison::LT);
  }
}

TEST_CASE("positive cone closure", "[order]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto g = random_element(rng, ctx2(), 4, 4);
    const auto h = random_element(rng, ctx2(), 4, 4);
    const int pos = is_positive(g), neg = is_positive(inverse(g)), idn = is_identity(g);
    REQUIRE(pos + neg + idn == 1);
    if (is_positive(g) && is_positive(h)) REQUIRE(is_positive(multiply(g, h)));
    if (is_positive(g)) REQUIRE(is_positive(multiply(multiply(inverse(h), g), h)));
  }
}

TEST_CASE("reversed order mirrors the standard one", "[order]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto g = random_element(rng, ctx2(), 4, 4);
    const auto h = random_element(rng, ctx2(), 4, 4);
    REQUIRE(compare(g, h, OrderDirection::reversed) == compare(h, g));
  }
}

TEST_CASE("central progressions are monotone", "[order]") {
  const auto y = ctx2().generator(1);
  const auto z = ctx2().central_generator(0, 1);
  MalcevElement prev = y;
  for (int e = 1; e <= 6; ++e) {
    const auto cur = multiply(prev, z);
    REQUIRE(compare(prev, cur) == Comparison::LT);
    prev = cur;
  }
}

TEST_CASE("subsets sort, dedupe and reject misuse", "[order]") {
  const auto x = ctx2().generator(0);
  const auto y = ctx2().generator(1);
  const auto z = ctx2().central_generator(0, 1);

  const Subset s = sort_subset(ctx2(), {x, y, x, multiply(y, z)});
  REQUIRE(s.size() == 3);
  CHECK(s[0] == y);                 // y < yz < x
  CHECK(s[1] == multiply(y, z));
  CHECK(s[2] == x);
  CHECK(s.min() == y);
  CHECK(s.max() == x);
  CHECK(s.min(OrderDirection::reversed) == x);
  CHECK(s.max(OrderDirection::reversed) == y);
  CHECK(s.contains(x));
  CHECK(!s.contains(z));

  const Subset t = s.without_index(2);
  REQUIRE(t.size() == 2);
  CHECK(!t.contains(x));

  CHECK_THROWS_AS(Subset::from_elements(ctx2(), {}), std::invalid_argument);
  CHECK_THROWS_AS(Subset::from_ascending(ctx2(), {x, y}), std::invalid_argument);
  CHECK_THROWS_AS(Subset::from_elements(ctx2(), {GroupContext(3).identity()}), DimensionError);
}

TEST_CASE("conjugation preserves subsets elementwise structure", "[order]") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<MalcevElement> elems;
    for (int t = 0; t < 4; ++t) elems.push_back(random_element(rng, ctx2(), 3, 3));
    const Subset s = Subset::from_elements(ctx2(), std::move(elems));
    const auto g = random_element(rng, ctx2(), 3, 3);
    const Subset c = conjugated(s, g);
    REQUIRE(c.size() == s.size());
    // conjugation is an order isomorphism here, so positions line up
    for (std::size_t t = 0; t < s.size(); ++t)
      REQUIRE(c[t] == multiply(multiply(inverse(g), s[t]), g));
  }
}
