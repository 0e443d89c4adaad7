#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <nil2/nil2.hpp>

using namespace nil2;

namespace {

const GroupContext& ctx2() {
  static GroupContext ctx(2);
  return ctx;
}

}  // namespace

TEST_CASE("element text round trip", "[io]") {
  CHECK(to_text(ctx2().generator(0)) == "gens:1,0;comms:0");
  CHECK(to_text(ctx2().identity()) == "gens:0,0;comms:0");
  CHECK(element_from_text("gens:1,0;comms:0") == ctx2().generator(0));
  CHECK(element_from_text(" gens: -3 , 7 ; comms: 12 ") == ctx2().element({-3, 7}, {12}));

  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n) {
    const GroupContext ctx(n);
    for (int t = 0; t < 200; ++t) {
      const MalcevElement g = random_element(rng, ctx, 1000, 1000);
      CHECK(element_from_text(to_text(g)) == g);
    }
  }
}

TEST_CASE("element text rejects malformed input", "[io]") {
  CHECK_THROWS_AS(element_from_text("gens:1,0"), ParseError);
  CHECK_THROWS_AS(element_from_text("gens:1;comms:0"), ParseError);
  CHECK_THROWS_AS(element_from_text("gens:1,0;comms:"), ParseError);
  CHECK_THROWS_AS(element_from_text("gens:1,0;comms:0,0"), ParseError);
  CHECK_THROWS_AS(element_from_text("gens:1,x;comms:0"), ParseError);
  CHECK_THROWS_AS(element_from_text("comms:0;gens:1,0"), ParseError);
  CHECK_THROWS_AS(element_from_text(""), ParseError);
  CHECK_THROWS_AS(element_from_text("gens:99999999999999999999;comms:0"), ParseError);
}

TEST_CASE("element json round trip and mixed input", "[io]") {
  const MalcevElement g = ctx2().element({2, -1}, {5});
  const Json j = g;
  CHECK(j["gens"] == Json::array({2, -1}));
  CHECK(j["comms"] == Json::array({5}));
  CHECK(j.get<MalcevElement>() == g);

  CHECK(element_from_any(R"({"gens":[2,-1],"comms":[5]})") == g);
  CHECK(element_from_any("gens:2,-1;comms:5") == g);
  CHECK(element_from_any("  \t{\"gens\":[0,0],\"comms\":[4]}") ==
        ctx2().element({0, 0}, {4}));
  CHECK_THROWS_AS(element_from_any(R"({"gens":[2,-1],"comms":[5,6]})"), ParseError);
  CHECK_THROWS_AS(element_from_any(R"({"gens":[2,-1]})"), ParseError);
  CHECK_THROWS_AS(element_from_any(R"({"gens":[],"comms":[]})"), ParseError);
}

TEST_CASE("subset file round trip", "[io]") {
  const Subset s = sort_subset(
      ctx2(), {ctx2().generator(1), multiply(ctx2().generator(1), ctx2().central_generator(0, 1)),
               ctx2().generator(0)});
  const std::string text = to_subset_file(s);
  CHECK(text.rfind("n=2\n", 0) == 0);
  CHECK(subset_from_text(text) == s);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<MalcevElement> els;
    for (int k = 0; k < 6; ++k) els.push_back(random_element(rng, ctx2(), 40, 40));
    const Subset u = sort_subset(ctx2(), els);
    CHECK(subset_from_text(to_subset_file(u)) == u);
  }

  const GroupContext ctx3(3);
  std::vector<MalcevElement> els3;
  for (int k = 0; k < 5; ++k) els3.push_back(random_element(rng, ctx3, 9, 9));
  const Subset u3 = sort_subset(ctx3, els3);
  CHECK(subset_from_text(to_subset_file(u3)) == u3);
}

TEST_CASE("subset parser skips comments and blanks", "[io]") {
  std::istringstream in(
      "# leading comment\n"
      "n=2\n"
      "\n"
      "# the two generators\n"
      "gens:1,0;comms:0\n"
      "   \n"
      "gens:0,1;comms:0\n");
  const Subset s = subset_from_stream(in);
  CHECK(s.context().generators() == 2);
  REQUIRE(s.size() == 2);
  CHECK(s.contains(s.context().generator(0)));
  CHECK(s.contains(s.context().generator(1)));
}

TEST_CASE("subset parser reports errors with line numbers", "[io]") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return subset_from_stream(in);
  };

  CHECK_THROWS_WITH(parse("gens:1,0;comms:0\n"), Catch::Matchers::ContainsSubstring("n=<rank>"));
  CHECK_THROWS_WITH(parse("n=0\n"), Catch::Matchers::ContainsSubstring("rank"));
  CHECK_THROWS_WITH(parse("n=2\n"), Catch::Matchers::ContainsSubstring("no elements"));
  CHECK_THROWS_WITH(parse(""), Catch::Matchers::ContainsSubstring("missing header"));
  CHECK_THROWS_WITH(parse("n=2\ngens:1,oops;comms:0\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(parse("n=2\ngens:1,0;comms:0\ngens:1,0;comms:0\n"),
                    Catch::Matchers::ContainsSubstring("line 3") &&
                        Catch::Matchers::ContainsSubstring("duplicate"));
  CHECK_THROWS_WITH(parse("n=2\ngens:1,0;comms:0\ngens:1,0,0;comms:0,0,0\n"),
                    Catch::Matchers::ContainsSubstring("line 3") &&
                        Catch::Matchers::ContainsSubstring("header says 2"));
}

TEST_CASE("report and description json shapes", "[io]") {
  const Subset s = construct_two_progressions(ctx2(), ctx2().generator(1), ctx2().generator(0),
                                              ctx2().central_generator(0, 1), 1, 1);
  const DoublingReport rep = doubling_report(s);
  const Json j = rep;
  CHECK(j["k"] == 4);
  CHECK(j["square_size"] == 10);
  CHECK(j["band"] == "eq_3k_minus_2");
  CHECK(j["landmarks"]["3k-2"] == 10);
  CHECK(j["landmarks"]["2k-1"] == 7);

  const auto d = recognize_structure(s);
  REQUIRE(d.has_value());
  const Json dj = *d;
  CHECK(dj["shape"] == "two_progressions");
  CHECK(dj["i"] == 1);
  CHECK(dj["j"] == 1);
  CHECK(dj["v"] == 1);
  CHECK(!dj.contains("exponents"));

  const auto p = recognize_progression_plus_point(sort_subset(
      ctx2(), {ctx2().generator(1), multiply(ctx2().generator(1), ctx2().central_generator(0, 1)),
               multiply(ctx2().generator(1), power(ctx2().central_generator(0, 1), 3)),
               ctx2().generator(0)}));
  REQUIRE(p.has_value());
  const Json pj = *p;
  CHECK(pj["shape"] == "progression_plus_point");
  CHECK(pj["has_holes"] == true);
  CHECK(pj["exponents"] == Json::array({0, 1, 3}));

  const Json sj = s;
  CHECK(sj["n"] == 2);
  CHECK(sj["elements"].size() == 4);
}
