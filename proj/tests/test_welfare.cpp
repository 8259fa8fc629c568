#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fairdiv/welfare.hpp"
#include "test_support.hpp"

using namespace fairdiv;
using fairdiv::test::Rng;

namespace {

const Instance kOpposedMixed({{2, -4, 1}, {-4, 2, 1}});
const Instance kOpposedBads({{-2, -1, -4}, {-1, -2, -4}});
const Instance kTwoHeavyBads(
    {{-4, -4, -1, -1, -1, -1}, {-4, -4, -1, -1, -1, -1}});
const Instance kOneSidedGoods({{1, 1, -1, -1}, {0, 0, -1, -1}});

}  // namespace

TEST_CASE("nash welfare") {
  CHECK(nash_welfare(kOpposedMixed, make_allocation(2, {{1, 2}, {0}}),
                     {0, 1}) == 12);
  // A zero factor wipes the product.
  CHECK(nash_welfare(kOpposedMixed, make_allocation(2, {{0, 1, 2}, {}}),
                     {0, 1}) == 0);
  // Balanced split of the heavy-bads instance: (-6) * (-6).
  CHECK(nash_welfare(kTwoHeavyBads, make_allocation(2, {{0, 2, 4}, {1, 3, 5}}),
                     {0, 1}) == 36);
}

TEST_CASE("disutility nash welfare") {
  CHECK(disutility_nash_welfare(kOpposedBads, make_allocation(2, {{0, 2}, {1}}),
                                {0, 1}) == 12);
  CHECK(disutility_nash_welfare(kTwoHeavyBads,
                                make_allocation(2, {{0, 1}, {2, 3, 4, 5}}),
                                {0, 1}) == 32);
  CHECK(disutility_nash_welfare(kTwoHeavyBads,
                                make_allocation(2, {{0, 2, 4}, {1, 3, 5}}),
                                {0, 1}) == 36);
}

TEST_CASE("egalitarian welfare") {
  CHECK(egalitarian_welfare(kOneSidedGoods,
                            make_allocation(2, {{0, 1, 2}, {3}}), {0, 1}) ==
        -1);
  CHECK(egalitarian_welfare(kOneSidedGoods,
                            make_allocation(2, {{0, 1, 2, 3}, {}}), {0, 1}) ==
        0);
  const Instance single({{5}});
  CHECK(egalitarian_welfare(single, empty_allocation(1), {0}) == 0);
}

TEST_CASE("welfare over an empty agent set is an error") {
  CHECK_THROWS_AS(nash_welfare(kOpposedMixed, empty_allocation(2), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(egalitarian_welfare(kOpposedMixed, empty_allocation(2), {}),
                  std::invalid_argument);
}

TEST_CASE("geometric-mean approximation comparisons") {
  SUBCASE("equal welfares always pass") {
    CHECK(geomean_approx_holds(7, 7, 3));
  }
  SUBCASE("the heavy-bads worst case sits between 1060 and 1061") {
    CHECK(geomean_approx_holds(32, 36, 2, 1000, 1061));
    CHECK_FALSE(geomean_approx_holds(32, 36, 2, 1000, 1060));
  }
  SUBCASE("zero against a positive optimum fails") {
    CHECK_FALSE(geomean_approx_holds(0, 5, 2));
  }
  SUBCASE("negative welfares are rejected") {
    CHECK_THROWS_AS(geomean_approx_holds(-1, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(geomean_approx_holds(5, -1, 2), std::invalid_argument);
  }
  SUBCASE("monotone in val, antitone in opt") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      const ExactValue val = rng.uniform(0, 50);
      const ExactValue opt = rng.uniform(0, 50);
      const int n = rng.uniform(1, 4);
      if (geomean_approx_holds(val, opt, n)) {
        CHECK(geomean_approx_holds(val + 1, opt, n));
        if (opt > 0) CHECK(geomean_approx_holds(val, opt - 1, n));
      }
    }
  }
}

TEST_CASE("disutility welfare equals nash welfare of the negated instance") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = test::random_general(rng, rng.uniform(1, 4),
                                           rng.uniform(1, 7), 10);
    auto negated_matrix = inst.u;
    for (auto& row : negated_matrix) {
      for (auto& v : row) v = -v;
    }
    const Instance negated(std::move(negated_matrix));
    const auto alloc = test::random_allocation(rng, inst);
    const auto agents = test::all_agents(inst);
    CHECK(disutility_nash_welfare(inst, alloc, agents) ==
          nash_welfare(negated, alloc, agents));
  }
}

TEST_CASE("egalitarian welfare lower-bounds every member") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = test::random_general(rng, rng.uniform(1, 4),
                                           rng.uniform(1, 7), 10);
    const auto alloc = test::random_allocation(rng, inst);
    const auto agents = test::all_agents(inst);
    const auto floor = egalitarian_welfare(inst, alloc, agents);
    for (int a : agents) {
      CHECK(floor <= bundle_utility(inst, a, alloc.bundles[a]));
    }
  }
}
