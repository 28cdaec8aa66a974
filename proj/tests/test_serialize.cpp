#include "pcw/serialize.hpp"

#include "doctest.h"
#include "pcw/rng.hpp"
#include "schema_check.hpp"
#include "support.hpp"

using namespace pcw;
using namespace pcw::testsupport;
using nlohmann::json;

TEST_CASE("rational json round trip") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational r(static_cast<std::int64_t>(rng.below(2000)) - 1000,
                     1 + static_cast<std::int64_t>(rng.below(40)));
    const json j = r;
    CHECK(j.get<Rational>() == r);
    std::string error;
    CHECK_MESSAGE(validate_schema(j, load_schema("rational"), error), error);
  }
}

TEST_CASE("pseudocodeword json round trip") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Pseudocodeword f = random_pseudocodeword(
        rng, 1 + rng.below(6), 2 + static_cast<std::uint32_t>(rng.below(4)),
        1 + static_cast<std::uint32_t>(rng.below(5)));
    const json j = f;
    CHECK(pseudocodeword_from_json(j) == f);
    std::string error;
    CHECK_MESSAGE(validate_schema(j, load_schema("pseudocodeword"), error), error);
  }
  SUBCASE("row sums are validated on load") {
    const json bad = {{"q", 2}, {"M", 2}, {"counts", {{1, 0}}}};
    CHECK_THROWS_AS(pseudocodeword_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("constellation json round trip") {
  const Constellation c = Constellation::psk(5);
  const json j = c;
  const Constellation back = constellation_from_json(j);
  REQUIRE(back.size() == 5);
  for (std::uint32_t m = 0; m < 5; ++m) {
    CHECK(back.point(m).x == c.point(m).x);
    CHECK(back.point(m).y == c.point(m).y);
  }
  std::string error;
  CHECK_MESSAGE(validate_schema(j, load_schema("constellation"), error), error);
  CHECK_THROWS_AS(
      constellation_from_json(json{{"q", 3}, {"points", {{1.0, 0.0}}}}),
      std::invalid_argument);
}

TEST_CASE("cover json round trip") {
  Rng rng(13);
  const auto base = shared(cycle_graph(4, 3));
  for (int trial = 0; trial < 20; ++trial) {
    const CoverSpec cover =
        random_lift(base, 1 + static_cast<std::uint32_t>(rng.below(5)), rng.next());
    const json j = cover;
    const CoverSpec back = cover_from_json(j, base);
    CHECK(back.degree() == cover.degree());
    CHECK(back.permutations() == cover.permutations());
    CHECK(back.seed() == cover.seed());
    std::string error;
    CHECK_MESSAGE(validate_schema(j, load_schema("cover"), error), error);
  }
  SUBCASE("covers must describe the base graph's edges") {
    const CoverSpec cover = random_lift(base, 2, 1);
    const json j = cover;
    const auto other = shared(spc_graph(3, 3));
    CHECK_THROWS_AS(cover_from_json(j, other), std::invalid_argument);
  }
}

TEST_CASE("graph json mirror") {
  const TannerGraph g = cycle_graph(3, 3);
  const json j = tanner_to_json(g);
  std::string error;
  CHECK_MESSAGE(validate_schema(j, load_schema("graph"), error), error);

  const TannerGraph back = tanner_from_json(j, 3);
  CHECK(back.parity_matrix() == g.parity_matrix());
  CHECK_THROWS_AS(tanner_from_json(j, 5), std::invalid_argument);

  // graph_from_text sniffs JSON by the leading brace, alist otherwise.
  const TannerGraph sniffed = graph_from_text(j.dump(), 3);
  CHECK(sniffed.parity_matrix() == g.parity_matrix());
  const TannerGraph alist =
      graph_from_text("3 1\n1 3\n1 1 1\n3\n1\n1\n1\n1 2 3\n", 2);
  CHECK(alist.variable_count() == 3);
}

TEST_CASE("qsc weight detail serialization") {
  const Pseudocodeword f(3, 2, {{1, 1, 0}, {1, 1, 0}, {2, 0, 0}});
  const json j = weight_qsc(f);
  CHECK(j.at("e") == 1);
  CHECK(j.at("equality_case") == true);
  CHECK(j.at("weight") == 2);
  REQUIRE(j.at("selection").size() == 1);
  CHECK(j.at("selection")[0].at("row") == 0);
  CHECK(j.at("selection")[0].at("column") == 1);
  CHECK(j.at("selection")[0].at("value") == json(Rational(1, 2)));
}

TEST_CASE("search report serialization validates against the shipped schema") {
  const auto base = shared(cycle_graph(3, 3));
  SearchConfig config;
  config.max_degree = 2;
  config.lifts_per_degree = 6;
  config.channels = {Channel::qsc, Channel::pam, Channel::psk};
  const SearchReport report = estimate_min_pseudoweight(base, config);
  const json j = report;
  std::string error;
  CHECK_MESSAGE(validate_schema(j, load_schema("search_report"), error), error);
}

TEST_CASE("bound report serialization") {
  const auto report = verify_dmin_bound(cycle_graph(4, 3));
  const json j = report;
  CHECK(j.at("d") == 2);
  CHECK(j.at("g") == 8);
  CHECK(j.at("tree_bound") == 4);
  CHECK(j.at("compared") == json(Rational(4)));
  CHECK(j.at("satisfied") == true);
  CHECK(j.at("witness").is_null());
}
