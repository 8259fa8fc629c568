#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fairdiv/model.hpp"
#include "test_support.hpp"

using namespace fairdiv;
using fairdiv::test::Rng;

namespace {

const Instance kOpposedMixed({{2, -4, 1}, {-4, 2, 1}});
const Instance kIdenticalBads({{-1, -1, -1, -1}, {-1, -1, -1, -1}});

}  // namespace

TEST_CASE("instance construction validates the matrix") {
  CHECK_THROWS_AS(Instance({}), std::invalid_argument);
  CHECK_THROWS_AS(Instance({{1, 2}, {1}}), std::invalid_argument);
  // Bundle sums must stay representable.
  const long long huge = 6'000'000'000'000'000'000LL;
  CHECK_THROWS_AS(Instance({{huge, huge}}), std::invalid_argument);
  const Instance no_items({{}, {}});
  CHECK(no_items.n == 2);
  CHECK(no_items.m == 0);
}

TEST_CASE("item classification") {
  SUBCASE("mixed goods including a pure good") {
    const auto classes = classify_items(kOpposedMixed);
    REQUIRE(classes.size() == 3);
    for (const auto& c : classes) CHECK(c.kind == ItemKind::MixedGood);
    CHECK_FALSE(classes[0].is_good);
    CHECK_FALSE(classes[1].is_good);
    CHECK(classes[2].is_good);
    CHECK(classes[2].is_pure_good);
  }
  SUBCASE("no items") {
    CHECK(classify_items(Instance({{}, {}})).empty());
  }
  SUBCASE("dummy bads") {
    const auto classes = classify_items(Instance({{0, -1}, {-1, 0}}));
    CHECK(classes[0].kind == ItemKind::DummyBad);
    CHECK(classes[1].kind == ItemKind::DummyBad);
  }
  SUBCASE("pure bads") {
    const auto classes = classify_items(kIdenticalBads);
    for (const auto& c : classes) CHECK(c.kind == ItemKind::PureBad);
  }
  SUBCASE("the three kinds partition the items") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const auto inst = test::random_general(rng, rng.uniform(1, 4),
                                             rng.uniform(0, 7), 3);
      const auto part = partition_items(inst);
      std::vector<int> all = part.mixed_goods;
      all.insert(all.end(), part.pure_bads.begin(), part.pure_bads.end());
      all.insert(all.end(), part.dummy_bads.begin(), part.dummy_bads.end());
      std::sort(all.begin(), all.end());
      CHECK(all == test::all_items(inst));
    }
  }
}

TEST_CASE("bundle utility") {
  CHECK(bundle_utility(kOpposedMixed, 0, {1, 2}) == -3);
  CHECK(bundle_utility(kOpposedMixed, 0, {}) == 0);
  const Instance steep({{7, 6, 5, -100, -2, -1}, {7, 6, 5, -100, -2, -1}});
  CHECK(bundle_utility(steep, 0, {0, 1, 2, 3}) == -82);

  SUBCASE("index errors") {
    CHECK_THROWS_AS(bundle_utility(kOpposedMixed, 2, {0}), std::out_of_range);
    CHECK_THROWS_AS(bundle_utility(kOpposedMixed, 0, {3}), std::out_of_range);
  }

  SUBCASE("additive over disjoint bundles") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
      const auto inst = test::random_general(rng, rng.uniform(1, 4),
                                             rng.uniform(1, 8), 50);
      std::vector<int> left, right;
      for (int o = 0; o < inst.m; ++o) {
        (rng.uniform(0, 1) ? left : right).push_back(o);
      }
      const int agent = rng.uniform(0, inst.n - 1);
      std::vector<int> both = left;
      both.insert(both.end(), right.begin(), right.end());
      std::sort(both.begin(), both.end());
      CHECK(bundle_utility(inst, agent, both) ==
            bundle_utility(inst, agent, left) +
                bundle_utility(inst, agent, right));
    }
  }

  SUBCASE("agent-independent for identical utilities") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const auto inst =
          test::random_identical(rng, rng.uniform(2, 4), rng.uniform(1, 8), 20);
      std::vector<int> bundle;
      for (int o = 0; o < inst.m; ++o) {
        if (rng.uniform(0, 1)) bundle.push_back(o);
      }
      for (int a = 1; a < inst.n; ++a) {
        CHECK(bundle_utility(inst, a, bundle) ==
              bundle_utility(inst, 0, bundle));
      }
    }
  }
}

TEST_CASE("allocation validation") {
  SUBCASE("duplicate item across bundles") {
    Allocation alloc;
    alloc.bundles = {{0}, {0}};
    alloc.scope = {0};
    const auto issues = validate_allocation(kOpposedMixed, alloc);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].find("held by agents 1 and 2") != std::string::npos);
  }
  SUBCASE("unallocated scope item") {
    Allocation alloc;
    alloc.bundles = {{0}, {}};
    alloc.scope = {0, 1};
    const auto issues = validate_allocation(kOpposedMixed, alloc);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].find("item 2 is unallocated") != std::string::npos);
  }
  SUBCASE("well-formed allocation passes") {
    const auto alloc = make_allocation(2, {{1, 2}, {0}});
    CHECK(validate_allocation(kOpposedMixed, alloc).empty());
    CHECK_NOTHROW(require_valid(kOpposedMixed, alloc));
  }
  SUBCASE("item out of range") {
    Allocation alloc;
    alloc.bundles = {{5}, {}};
    alloc.scope = {5};
    CHECK_FALSE(validate_allocation(kOpposedMixed, alloc).empty());
  }
  SUBCASE("restriction keeps only the requested items") {
    const auto alloc = make_allocation(2, {{0, 2}, {1}});
    const auto restricted = restrict_to(alloc, {0, 1});
    CHECK(restricted.bundles == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(restricted.scope == std::vector<int>{0, 1});
  }
}

TEST_CASE("utility class detection") {
  SUBCASE("identical tertiary bads") {
    const auto cls = detect_utility_class(kIdenticalBads);
    CHECK(cls.kind == UtilityClass::Kind::IdenticalTertiary);
    CHECK(cls.alpha == 1);
  }
  SUBCASE("general") {
    CHECK(detect_utility_class(kOpposedMixed).kind ==
          UtilityClass::Kind::General);
  }
  SUBCASE("a single row is identical, and tertiary when one value appears") {
    const auto cls = detect_utility_class(Instance({{5}}));
    CHECK(cls.is_identical());
    CHECK(cls.kind == UtilityClass::Kind::IdenticalTertiary);
    CHECK(cls.alpha == 5);
  }
  SUBCASE("identical but not tertiary") {
    const auto cls = detect_utility_class(Instance({{3, 2}, {3, 2}}));
    CHECK(cls.kind == UtilityClass::Kind::Identical);
  }
  SUBCASE("tertiary but not identical") {
    const auto cls = detect_utility_class(Instance({{2, -2}, {0, 2}}));
    CHECK(cls.kind == UtilityClass::Kind::Tertiary);
    CHECK(cls.alpha == 2);
  }
  SUBCASE("all-zero and empty matrices report alpha 1") {
    const auto zero = detect_utility_class(Instance({{0, 0}, {0, 0}}));
    CHECK(zero.kind == UtilityClass::Kind::IdenticalTertiary);
    CHECK(zero.alpha == 1);
    const auto empty = detect_utility_class(Instance({{}, {}}));
    CHECK(empty.kind == UtilityClass::Kind::IdenticalTertiary);
    CHECK(empty.alpha == 1);
  }
  SUBCASE("random tertiary matrices are detected") {
    Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
      const long long alpha = rng.uniform(1, 3);
      const auto inst = test::random_tertiary(rng, rng.uniform(1, 4),
                                              rng.uniform(1, 8), alpha);
      CHECK(detect_utility_class(inst).is_tertiary());
    }
  }
}
