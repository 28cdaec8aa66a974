#include "pcw/bounds.hpp"

#include <vector>

#include "doctest.h"
#include "pcw/rng.hpp"
#include "support.hpp"

using namespace pcw;
using namespace pcw::testsupport;

TEST_CASE("tree bound values") {
  // Direct evaluation of the case split:
  //   g/2 odd : 1 + d + d(d-1) + ... + d(d-1)^((g-6)/4)
  //   g/2 even: 1 + d + ... + d(d-1)^((g-8)/4) + (d-1)^((g-4)/4)
  CHECK(tree_bound(3, 6) == 4);    // 1 + 3
  CHECK(tree_bound(3, 8) == 6);    // 1 + 3 + 2
  CHECK(tree_bound(4, 10) == 17);  // 1 + 4 + 12
  CHECK(tree_bound(2, 6) == 3);    // 1 + 2
  CHECK(tree_bound(3, 4) == 2);    // 1 + (d-1)^0, middle sum empty
  CHECK(tree_bound(2, 4) == 2);
  CHECK(tree_bound(3, 12) == 14);  // 1 + 3 + 6 + 4
  CHECK(tree_bound(5, 8) == 10);   // 1 + 5 + 4
}

TEST_CASE("tree bound domain errors") {
  CHECK_THROWS_AS(tree_bound(1, 6), std::domain_error);
  CHECK_THROWS_AS(tree_bound(3, 5), std::domain_error);
  CHECK_THROWS_AS(tree_bound(3, 2), std::domain_error);
  CHECK_THROWS_AS(tree_bound(3, 0), std::domain_error);
}

TEST_CASE("tree bound is nondecreasing in d and g") {
  const std::vector<int> degrees = {2, 3, 4, 5, 6};
  const std::vector<int> girths = {4, 6, 8, 10, 12};
  for (std::size_t di = 0; di < degrees.size(); ++di) {
    for (std::size_t gi = 0; gi < girths.size(); ++gi) {
      const std::uint64_t t = tree_bound(degrees[di], girths[gi]);
      if (di > 0) CHECK(t >= tree_bound(degrees[di - 1], girths[gi]));
      if (gi > 0) CHECK(t >= tree_bound(degrees[di], girths[gi - 1]));
    }
  }
}

TEST_CASE("minimum-distance bound verification") {
  SUBCASE("cycle of 4 variables over GF(3): d_min = 4 >= T(2,8) = 4") {
    const auto report = verify_dmin_bound(cycle_graph(4, 3));
    CHECK(report.d == 2);
    CHECK(report.g == 8);
    CHECK(report.tree_bound_value == 4);
    REQUIRE(report.compared_quantity);
    CHECK(*report.compared_quantity == Rational(4));
    CHECK(report.satisfied);
  }
  SUBCASE("cycle of 3 variables over GF(2): d_min = 3 >= T(2,6) = 3") {
    const auto report = verify_dmin_bound(cycle_graph(3, 2));
    CHECK(report.tree_bound_value == 3);
    REQUIRE(report.compared_quantity);
    CHECK(*report.compared_quantity == Rational(3));
    CHECK(report.satisfied);
  }
  SUBCASE("cycle of 3 variables over GF(3): zero code, vacuously satisfied") {
    const auto report = verify_dmin_bound(cycle_graph(3, 3));
    CHECK(report.tree_bound_value == 3);
    CHECK_FALSE(report.compared_quantity);
    CHECK(report.satisfied);
  }
  SUBCASE("complete bipartite 3x3 over GF(2): d_min = 2 >= T(3,4) = 2") {
    const auto report = verify_dmin_bound(k33_graph(2));
    CHECK(report.d == 3);
    CHECK(report.g == 4);
    CHECK(report.tree_bound_value == 2);
    REQUIRE(report.compared_quantity);
    CHECK(*report.compared_quantity == Rational(2));
    CHECK(report.satisfied);
  }
  SUBCASE("acyclic graph is rejected") {
    const TannerGraph tree(3, 2, 2, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(verify_dmin_bound(tree), std::domain_error);
  }
  SUBCASE("min left degree below 2 is rejected") {
    // Hamming(7,4) has unit-weight columns, so no tree bound applies.
    CHECK_THROWS_AS(verify_dmin_bound(hamming74_graph()), std::domain_error);
  }
}

TEST_CASE("distance bound property: d_min >= T(d, g) on random unity-weight graphs") {
  Rng rng(2024);
  int verified = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 8; ++trial) {
      const TannerGraph g = random_graph(rng, 5 + static_cast<int>(rng.below(3)),
                                         4 + static_cast<int>(rng.below(2)), 2, q);
      const auto gr = girth(g);
      if (!gr.girth || gr.min_left_degree < 2) continue;
      const auto report = verify_dmin_bound(g);
      CHECK(report.satisfied);
      ++verified;
    }
  }
  CHECK(verified >= 20);
}

TEST_CASE("pseudoweight bound verification over sample streams") {
  SUBCASE("codeword-only stream on Hamming (7,4)") {
    // All codeword indicator weights equal the Hamming weights; min is 3,
    // compared against T(3, 4) = 2 for a hypothetical 3-left-regular graph.
    std::vector<WeightSample> samples;
    for (const auto& c : all_nonzero_codewords(hamming74_graph())) {
      samples.push_back({"w" + std::to_string(hamming_weight(c)),
                         Rational(static_cast<std::int64_t>(hamming_weight(c)))});
    }
    REQUIRE(samples.size() == 15);
    const auto report = verify_wmin_bound(samples, 3, 4);
    CHECK(report.tree_bound_value == 2);
    CHECK(report.compared_quantity == Rational(3));
    CHECK(report.satisfied);
  }
  SUBCASE("a weight-1 sample violates T = 2") {
    const std::vector<WeightSample> samples = {{"good", Rational(5)},
                                               {"bad", Rational(1)}};
    const auto report = verify_wmin_bound(samples, 3, 4);
    CHECK_FALSE(report.satisfied);
    CHECK(report.witness == "bad");
    CHECK(report.compared_quantity == Rational(1));
  }
  SUBCASE("empty stream is an error") {
    CHECK_THROWS_AS(verify_wmin_bound({}, 3, 4), std::invalid_argument);
  }
}

TEST_CASE("per-constraint inequality on cover pseudocodewords") {
  // For every check c and neighbor i: (1-f[i][0]) <= sum_{j in N(c), j != i}
  // (1 - f[j][0]). Checked exactly for random-lift samples elsewhere; here
  // the comparator itself.
  const TannerGraph g = spc_graph(3, 3);
  SUBCASE("balanced rows pass") {
    const Pseudocodeword f(3, 2, {{1, 1, 0}, {1, 1, 0}, {2, 0, 0}});
    const auto report = check_constraint_inequality(g, f);
    CHECK(report.holds);
    CHECK(report.comparisons == 3);
  }
  SUBCASE("an isolated nonzero variable fails") {
    const Pseudocodeword f(3, 1, {{0, 1, 0}, {1, 0, 0}, {1, 0, 0}});
    const auto report = check_constraint_inequality(g, f);
    CHECK_FALSE(report.holds);
    REQUIRE(report.violation);
    CHECK(report.violation->first == 0);
    CHECK(report.violation->second == 0);
  }
  SUBCASE("length mismatch is rejected") {
    const Pseudocodeword f(3, 1, {{1, 0, 0}});
    CHECK_THROWS_AS(check_constraint_inequality(g, f), std::invalid_argument);
  }
}
