#include "pcw/tanner.hpp"

#include <string>

#include "doctest.h"
#include "pcw/rng.hpp"
#include "support.hpp"

using namespace pcw;
using namespace pcw::testsupport;

namespace {

const char* kFullyConnected23 =
    "3 2\n"
    "2 3\n"
    "2 2 2\n"
    "3 3\n"
    "1 2\n"
    "1 2\n"
    "1 2\n"
    "1 2 3\n"
    "1 2 3\n";

// Standard (7,4) Hamming parity-check matrix, zero-padded columns.
const char* kHamming74 =
    "7 3\n"
    "3 4\n"
    "1 1 2 1 2 2 3\n"
    "4 4 4\n"
    "1 0 0\n"
    "2 0 0\n"
    "1 2 0\n"
    "3 0 0\n"
    "1 3 0\n"
    "2 3 0\n"
    "1 2 3\n"
    "1 3 5 7\n"
    "2 3 6 7\n"
    "4 5 6 7\n";

}  // namespace

TEST_CASE("alist parsing: fully connected 2x3") {
  const TannerGraph g = TannerGraph::from_alist(kFullyConnected23, 3);
  CHECK(g.variable_count() == 3);
  CHECK(g.check_count() == 2);
  CHECK(g.modulus() == 3);
  for (int v = 0; v < 3; ++v) CHECK(g.variable_degree(v) == 2);
  for (int c = 0; c < 2; ++c) CHECK(g.check_degree(c) == 3);
  CHECK(g.is_left_regular());
  CHECK(g.min_left_degree() == 2);
}

TEST_CASE("alist parsing: Hamming (7,4)") {
  const TannerGraph g = TannerGraph::from_alist(kHamming74, 2);
  CHECK(g.variable_count() == 7);
  CHECK(g.check_count() == 3);
  CHECK(g.parity_matrix() == GfMatrix::from_rows({{1, 0, 1, 0, 1, 0, 1},
                                                  {0, 1, 1, 0, 0, 1, 1},
                                                  {0, 0, 0, 1, 1, 1, 1}},
                                                 2));
}

TEST_CASE("alist parsing: value-extended entries") {
  // (index, value) pairs; unity values are accepted ...
  const char* unity =
      "2 1\n"
      "1 2\n"
      "1 1\n"
      "2\n"
      "1 1\n"
      "1 1\n"
      "1 1 2 1\n";
  const TannerGraph g = TannerGraph::from_alist(unity, 5);
  CHECK(g.variable_count() == 2);
  CHECK(g.check_count() == 1);
  CHECK(g.check_degree(0) == 2);

  // ... non-unity values are not.
  const char* weighted =
      "2 1\n"
      "1 2\n"
      "1 1\n"
      "2\n"
      "1 1\n"
      "1 2\n"
      "1 1 2 2\n";
  CHECK_THROWS_WITH_AS(TannerGraph::from_alist(weighted, 5),
                       doctest::Contains("non-unity edge weight unsupported"),
                       std::invalid_argument);
}

TEST_CASE("alist parsing: malformed inputs") {
  CHECK_THROWS_AS(TannerGraph::from_alist("1 1\n", 2), std::invalid_argument);
  CHECK_THROWS_AS(TannerGraph::from_alist("garbage\n", 2), std::invalid_argument);
  // q must be prime.
  CHECK_THROWS_AS(TannerGraph::from_alist(kFullyConnected23, 4),
                  std::invalid_argument);
  // Variable side says v1-c1, v2-c2; check side says both checks join v1.
  const char* mismatch =
      "2 2\n"
      "1 1\n"
      "1 1\n"
      "1 1\n"
      "1\n"
      "2\n"
      "1\n"
      "1\n";
  CHECK_THROWS_AS(TannerGraph::from_alist(mismatch, 2), std::invalid_argument);
}

TEST_CASE("parallel edges are rejected, not merged") {
  CHECK_THROWS_WITH_AS(TannerGraph(2, 1, 2, {{0, 0, 1}}),
                       doctest::Contains("parallel edge"),
                       std::invalid_argument);
}

TEST_CASE("girth of small graphs") {
  SUBCASE("complete bipartite 3x2 has girth 4") {
    const TannerGraph g(3, 2, 3, {{0, 1, 2}, {0, 1, 2}});
    const auto report = girth(g);
    REQUIRE(report.girth);
    CHECK(*report.girth == 4);
  }
  SUBCASE("cycle of 3 variables has girth 6") {
    const auto report = girth(cycle_graph(3, 3));
    REQUIRE(report.girth);
    CHECK(*report.girth == 6);
    CHECK(report.min_left_degree == 2);
    CHECK(report.is_d_left_regular);
  }
  SUBCASE("cycle of 4 variables has girth 8") {
    const auto report = girth(cycle_graph(4, 3));
    REQUIRE(report.girth);
    CHECK(*report.girth == 8);
  }
  SUBCASE("trees have no cycle") {
    const TannerGraph g(3, 2, 2, {{0, 1}, {1, 2}});
    CHECK_FALSE(girth(g).girth);
  }
  SUBCASE("Hamming (7,4) has girth 4") {
    const auto report = girth(hamming74_graph());
    REQUIRE(report.girth);
    CHECK(*report.girth == 4);
    CHECK(report.min_left_degree == 1);
    CHECK_FALSE(report.is_d_left_regular);
  }
}

TEST_CASE("girth is invariant under relabeling") {
  Rng rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const TannerGraph g = random_graph(rng, 6, 5, 2, 2);
    const auto base = girth(g);
    REQUIRE(base.girth);
    CHECK(*base.girth % 2 == 0);  // bipartite: finite girth is even
    CHECK(*base.girth >= 4);

    std::vector<int> vperm(6), cperm(5);
    for (int i = 0; i < 6; ++i) vperm[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < 5; ++i) cperm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(vperm);
    rng.shuffle(cperm);

    std::vector<std::vector<int>> checks(5);
    for (int c = 0; c < 5; ++c) {
      for (int v : g.check_neighbors(c)) {
        checks[static_cast<std::size_t>(cperm[static_cast<std::size_t>(c)])]
            .push_back(vperm[static_cast<std::size_t>(v)]);
      }
    }
    const TannerGraph relabeled(6, 5, 2, std::move(checks));
    CHECK(girth(relabeled).girth == base.girth);
  }
}

TEST_CASE("minimum distance by brute force") {
  SUBCASE("single parity check over GF(2)") {
    CHECK(min_distance_bruteforce(spc_graph(3, 2)) == 2);
  }
  SUBCASE("Hamming (7,4)") {
    const TannerGraph g = hamming74_graph();
    const auto dmin = min_distance_bruteforce(g);
    // Oracle: full scan of GF(2)^7.
    CHECK(dmin == dmin_full_space_oracle(g.parity_matrix()));
    CHECK(dmin == 3);
  }
  SUBCASE("single parity check over GF(3), n=4") {
    const TannerGraph g = spc_graph(4, 3);
    const auto dmin = min_distance_bruteforce(g);
    CHECK(dmin == dmin_full_space_oracle(g.parity_matrix()));
    CHECK(dmin == 2);  // e.g. (1,2,0,0)
  }
  SUBCASE("trivial code has no nonzero codeword") {
    const TannerGraph g = TannerGraph::from_parity_matrix(
        GfMatrix::from_rows({{1, 0}, {0, 1}}, 2));
    CHECK_FALSE(min_distance_bruteforce(g));
  }
  SUBCASE("cycle of 3 variables over GF(3) is the zero code") {
    // Walking the cycle forces alternating signs, which cannot close an
    // odd cycle over GF(3).
    const TannerGraph g = cycle_graph(3, 3);
    CHECK_FALSE(min_distance_bruteforce(g));
    CHECK_FALSE(dmin_full_space_oracle(g.parity_matrix()));
  }
  SUBCASE("cycle of 4 variables over GF(3) has distance 4") {
    const TannerGraph g = cycle_graph(4, 3);
    const auto dmin = min_distance_bruteforce(g);
    CHECK(dmin == dmin_full_space_oracle(g.parity_matrix()));
    CHECK(dmin == 4);  // (1,2,1,2) works
  }
  SUBCASE("dimension guard") {
    CHECK_THROWS_AS(min_distance_bruteforce(spc_graph(30, 2), 1 << 10),
                    dimension_too_large);
  }
}

TEST_CASE("brute-force distance agrees with the full-space oracle on random graphs") {
  Rng rng(31415);
  for (std::uint32_t q : {2u, 3u}) {
    for (int trial = 0; trial < 8; ++trial) {
      const TannerGraph g = random_graph(rng, 5, 4, 2, q);
      CHECK(min_distance_bruteforce(g) ==
            dmin_full_space_oracle(g.parity_matrix()));
    }
  }
}
