#include "paper_examples.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "fairdiv/algorithms.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/matching.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/welfare.hpp"

namespace fairdiv::cli {

namespace {

struct Assertion {
  std::string id;
  // Returns an error description on failure.
  std::function<std::optional<std::string>()> run;
};

Allocation bundles_1b(const Instance& inst,
                      std::vector<std::vector<int>> bundles) {
  for (auto& row : bundles) {
    for (int& o : row) --o;
  }
  return make_allocation(inst.n, std::move(bundles));
}

std::string show(const Allocation& alloc) {
  std::ostringstream out;
  out << "[";
  for (std::size_t a = 0; a < alloc.bundles.size(); ++a) {
    if (a) out << ",";
    out << "[";
    for (std::size_t i = 0; i < alloc.bundles[a].size(); ++i) {
      if (i) out << ",";
      out << alloc.bundles[a][i] + 1;
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

bool contains_allocation(const std::vector<Allocation>& list,
                         const Allocation& alloc) {
  for (const auto& entry : list) {
    if (entry.bundles == alloc.bundles) return true;
  }
  return false;
}

bool has_witness(const FairnessReport& report, int envier, int envied) {
  for (const auto& w : report.witnesses) {
    if (w.envier == envier && w.envied == envied) return true;
  }
  return false;
}

bool dominates(const Instance& inst, const Allocation& better,
               const Allocation& worse) {
  const auto lhs = utility_profile(inst, better);
  const auto rhs = utility_profile(inst, worse);
  bool strict = false;
  for (int a = 0; a < inst.n; ++a) {
    if (lhs[a] < rhs[a]) return false;
    if (lhs[a] > rhs[a]) strict = true;
  }
  return strict;
}

#define EXPECT(cond, message)                       \
  do {                                              \
    if (!(cond)) return std::string(message);       \
  } while (0)

std::vector<Assertion> build_assertions(const PaperExamplesOptions& options) {
  const std::string dir = options.fixtures_dir + "/";
  std::vector<Assertion> assertions;
  auto add = [&](std::string id,
                 std::function<std::optional<std::string>()> run) {
    assertions.push_back({std::move(id), std::move(run)});
  };

  // ----- example1: two agents, two opposed mixed goods, one pure good -----
  add("ex1.classify", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    const auto classes = classify_items(inst);
    EXPECT(classes.size() == 3, "expected 3 items");
    for (int o = 0; o < 3; ++o) {
      EXPECT(classes[o].kind == ItemKind::MixedGood,
             "item " + std::to_string(o + 1) + " should be a mixed good");
    }
    EXPECT(!classes[0].is_good && !classes[1].is_good,
           "items 1 and 2 are not goods for everyone");
    EXPECT(classes[2].is_pure_good, "item 3 should be a pure good");
    return std::nullopt;
  });
  add("ex1.bundle-utility", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    EXPECT(bundle_utility(inst, 0, {1, 2}) == -3,
           "agent 1 on items {2,3} should total -3");
    EXPECT(bundle_utility(inst, 0, {}) == 0, "empty bundle should total 0");
    return std::nullopt;
  });
  add("ex1.allocation-valid", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    const auto alloc = bundles_1b(inst, {{2, 3}, {1}});
    const auto issues = validate_allocation(inst, alloc);
    EXPECT(issues.empty(), "allocation [[2,3],[1]] should be valid");
    return std::nullopt;
  });
  add("ex1.utility-class", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    EXPECT(detect_utility_class(inst).kind == UtilityClass::Kind::General,
           "utilities should be general");
    return std::nullopt;
  });
  add("ex1.largest-set", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    EXPECT(largest_positive_set(inst) == AgentSet({0, 1}),
           "largest positive set should be {1,2}");
    return std::nullopt;
  });
  add("ex1.max-nash", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    const auto goods = partition_items(inst).mixed_goods;
    const auto result = max_welfare(inst, {0, 1}, goods, WelfareKind::Nash);
    EXPECT(result.optimum == 12,
           "max NW should be 12, got " + result.optimum.str());
    EXPECT(contains_allocation(result.optimizers, bundles_1b(inst, {{2, 3}, {1}})),
           "[[2,3],[1]] should be an optimizer");
    EXPECT(contains_allocation(result.optimizers, bundles_1b(inst, {{2}, {1, 3}})),
           "[[2],[1,3]] should be an optimizer");
    EXPECT(result.optimizer_count == 2, "exactly two optimizers expected");
    return std::nullopt;
  });
  add("ex1.ef1-fails", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    const auto a = check_ef1(inst, bundles_1b(inst, {{2, 3}, {1}}));
    EXPECT(!a.holds && has_witness(a, 0, 1),
           "[[2,3],[1]] should fail EF1 with agent 1 envying agent 2");
    const auto b = check_ef1(inst, bundles_1b(inst, {{2}, {1, 3}}));
    EXPECT(!b.holds && has_witness(b, 1, 0),
           "[[2],[1,3]] should fail EF1 with agent 2 envying agent 1");
    return std::nullopt;
  });
  add("ex1.po-fails", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    const auto a = bundles_1b(inst, {{2, 3}, {1}});
    const auto swapped_a = bundles_1b(inst, {{1, 3}, {2}});
    EXPECT(!pareto_optimal_exhaustive(inst, a).pareto_optimal,
           "[[2,3],[1]] should not be Pareto optimal");
    EXPECT(dominates(inst, swapped_a, a),
           "swapping items 1 and 2 should dominate [[2,3],[1]]");
    const auto b = bundles_1b(inst, {{2}, {1, 3}});
    const auto swapped_b = bundles_1b(inst, {{1}, {2, 3}});
    EXPECT(!pareto_optimal_exhaustive(inst, b).pareto_optimal,
           "[[2],[1,3]] should not be Pareto optimal");
    EXPECT(dominates(inst, swapped_b, b),
           "swapping items 1 and 2 should dominate [[2],[1,3]]");
    return std::nullopt;
  });
  add("ex1.solve-precondition", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example1.json").instance;
    try {
      nash_max_tertiary(inst);
    } catch (const precondition_error&) {
      return std::nullopt;
    }
    return std::string("nash-max-tertiary should reject general utilities");
  });

  // ----- example2: four identical pure bads -----
  add("ex2.utility-class", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example2.json").instance;
    const auto cls = detect_utility_class(inst);
    EXPECT(cls.kind == UtilityClass::Kind::IdenticalTertiary && cls.alpha == 1,
           "utilities should be identical-tertiary with alpha 1");
    return std::nullopt;
  });
  add("ex2.po-identical", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example2.json").instance;
    EXPECT(check_po(inst, bundles_1b(inst, {{1, 2, 3, 4}, {}}),
                    PoStrategy::IdenticalFast),
           "every complete allocation should be Pareto optimal");
    EXPECT(check_po(inst, bundles_1b(inst, {{1}, {2, 3, 4}}),
                    PoStrategy::IdenticalFast),
           "every complete allocation should be Pareto optimal");
    return std::nullopt;
  });
  add("ex2.ef-fails", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example2.json").instance;
    const auto report = check_ef(inst, bundles_1b(inst, {{1, 2, 3, 4}, {}}));
    EXPECT(!report.holds && has_witness(report, 0, 1),
           "giving everything to agent 1 should fail EF via (1,2)");
    return std::nullopt;
  });
  add("ex2.min-dnw", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example2.json").instance;
    const std::vector<int> items{0, 1, 2, 3};
    const auto result =
        min_welfare(inst, {0, 1}, items, WelfareKind::DisutilityNash);
    EXPECT(result.optimum == 0, "unconstrained minimum should be 0");
    for (const auto& alloc : result.optimizers) {
      bool someone_empty = false;
      for (const auto& bundle : alloc.bundles) {
        someone_empty = someone_empty || bundle.empty();
      }
      EXPECT(someone_empty, "every optimizer should starve one agent");
      EXPECT(!check_ef1(inst, alloc).holds, "every optimizer should fail EF1");
    }
    return std::nullopt;
  });
  add("ex2.min-dnw-constrained", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example2.json").instance;
    const std::vector<int> items{0, 1, 2, 3};
    const auto result = min_welfare(inst, {0, 1}, items,
                                    WelfareKind::DisutilityNash,
                                    /*require_each_agent_nonempty=*/true);
    EXPECT(result.optimum == 3, "constrained minimum should be 3");
    for (const auto& alloc : result.optimizers) {
      const std::size_t lo =
          std::min(alloc.bundles[0].size(), alloc.bundles[1].size());
      const std::size_t hi =
          std::max(alloc.bundles[0].size(), alloc.bundles[1].size());
      EXPECT(lo == 1 && hi == 3, "every optimizer should be a 1/3 split");
      EXPECT(!check_ef1(inst, alloc).holds, "every optimizer should fail EF1");
    }
    return std::nullopt;
  });
  add("ex2.solve", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example2.json").instance;
    const auto result = nash_max_tertiary(inst);
    EXPECT(result.allocation.bundles ==
               bundles_1b(inst, {{1, 3}, {2, 4}}).bundles,
           "expected two bads per agent, got " + show(result.allocation));
    EXPECT(check_efx(inst, result.allocation).holds, "output should be EFX");
    return std::nullopt;
  });

  // ----- example3: three pure bads with opposed small bads -----
  add("ex3.max-dnw", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example3.json").instance;
    const auto result =
        max_welfare(inst, {0, 1}, {0, 1, 2}, WelfareKind::DisutilityNash);
    EXPECT(result.optimum == 12,
           "max dNW should be 12, got " + result.optimum.str());
    EXPECT(contains_allocation(result.optimizers, bundles_1b(inst, {{1, 3}, {2}})),
           "[[1,3],[2]] should be an optimizer");
    EXPECT(contains_allocation(result.optimizers, bundles_1b(inst, {{1}, {2, 3}})),
           "[[1],[2,3]] should be an optimizer");
    return std::nullopt;
  });
  add("ex3.ef1-fails", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example3.json").instance;
    const auto a = check_ef1(inst, bundles_1b(inst, {{1, 3}, {2}}));
    EXPECT(!a.holds && has_witness(a, 0, 1), "[[1,3],[2]] should fail EF1");
    const auto b = check_ef1(inst, bundles_1b(inst, {{1}, {2, 3}}));
    EXPECT(!b.holds && has_witness(b, 1, 0), "[[1],[2,3]] should fail EF1");
    return std::nullopt;
  });
  add("ex3.po-fails", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example3.json").instance;
    const auto a = bundles_1b(inst, {{1, 3}, {2}});
    EXPECT(!pareto_optimal_exhaustive(inst, a).pareto_optimal,
           "[[1,3],[2]] should not be Pareto optimal");
    EXPECT(dominates(inst, bundles_1b(inst, {{2, 3}, {1}}), a),
           "swapping bads 1 and 2 should dominate [[1,3],[2]]");
    const auto b = bundles_1b(inst, {{1}, {2, 3}});
    EXPECT(!pareto_optimal_exhaustive(inst, b).pareto_optimal,
           "[[1],[2,3]] should not be Pareto optimal");
    EXPECT(dominates(inst, bundles_1b(inst, {{2}, {1, 3}}), b),
           "swapping bads 1 and 2 should dominate [[1],[2,3]]");
    return std::nullopt;
  });

  // ----- example4: identical, three pure goods + three pure bads -----
  add("ex4.efx-holds", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example4.json").instance;
    EXPECT(check_efx(inst, bundles_1b(inst, {{1, 2, 3, 4}, {5, 6}})).holds,
           "[[1,2,3,4],[5,6]] should be EFX");
    return std::nullopt;
  });
  add("ex4.no-efx3", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example4.json").instance;
    const std::vector<int> items{0, 1, 2, 3, 4, 5};
    PropertyQuery efx3;
    efx3.kind = PropertyQuery::Kind::EFX3;
    const auto found = find_fair(inst, efx3, {0, 1}, items);
    EXPECT(!found.has_value(), "no EFX3 allocation should exist");
    return std::nullopt;
  });
  add("ex4.efx3-union-fails", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example4.json").instance;
    const auto unioned = bundles_1b(inst, {{1, 4}, {2, 3, 5, 6}});
    EXPECT(bundle_utility(inst, 0, {0}) == 7 &&
               bundle_utility(inst, 0, unioned.bundles[1]) == 8,
           "dropping bad 4 should leave agent 1 with 7 against 8");
    const auto report = check_efx3(inst, unioned);
    EXPECT(!report.holds, "the union should fail EFX3");
    bool pinned = false;
    for (const auto& w : report.witnesses) {
      pinned = pinned || (w.envier == 0 && w.envied == 1 && w.item == 3 &&
                          w.layer == "full");
    }
    EXPECT(pinned, "the witness should pin bad 4 on the full layer");
    return std::nullopt;
  });
  add("ex4.identical-solve", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example4.json").instance;
    const auto result = max_min_identical(inst);
    std::vector<int> seen;
    for (const auto& event : result.trace.events) seen.push_back(event.item);
    EXPECT(seen == std::vector<int>({3, 0, 1, 2, 4, 5}),
           "items should be handled in order 4,1,2,3,5,6");
    EXPECT(check_efx(inst, result.allocation).holds, "output should be EFX");
    return std::nullopt;
  });

  // ----- example5: three agents, two pure goods, one pure bad -----
  add("ex5.largest-set", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example5.json").instance;
    const auto n_set = largest_positive_set(inst);
    EXPECT(n_set.size() == 2, "largest positive set should have two agents");
    EXPECT(n_set == AgentSet({0, 1}), "deterministic scan should pick {1,2}");
    return std::nullopt;
  });
  add("ex5.feasible-bad-set", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example5.json").instance;
    const auto n_set = largest_positive_set(inst);
    const auto goods_alloc = alg_binary(inst, n_set);
    const auto m_set = largest_feasible_bad_set(inst, n_set, goods_alloc);
    EXPECT(m_set.size() == 1, "one pure bad means one receiver");
    EXPECT(m_set.front() != 2, "receiver must come from the positive set");
    EXPECT(std::find(n_set.begin(), n_set.end(), m_set.front()) != n_set.end(),
           "receiver must come from the positive set");
    return std::nullopt;
  });
  add("ex5.infeasible-receivers", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example5.json").instance;
    NashMaxMinOptions options;
    options.forced_bad_receivers = AgentSet{2};
    const auto result = nash_max_min_tertiary(inst, options);
    EXPECT(!check_ef1(inst, result.allocation).holds,
           "violating the nesting constraint should break EF1");
    return std::nullopt;
  });
  add("ex5.solve", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example5.json").instance;
    const auto result = nash_max_min_tertiary(inst);
    EXPECT(check_efx3(inst, result.allocation).holds,
           "feasible receivers should give an EFX3 allocation");
    return std::nullopt;
  });

  // ----- example6: two agents, two heavy bads plus unit bads -----
  add("ex6.welfare-values", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example6_m4.json").instance;
    const auto heavy = bundles_1b(inst, {{1, 2}, {3, 4, 5, 6}});
    EXPECT(disutility_nash_welfare(inst, heavy, {0, 1}) == 32,
           "heavy split should have dNW 32");
    const auto balanced = bundles_1b(inst, {{1, 3, 5}, {2, 4, 6}});
    EXPECT(disutility_nash_welfare(inst, balanced, {0, 1}) == 36,
           "balanced split should have dNW 36");
    EXPECT(nash_welfare(inst, balanced, {0, 1}) == 36,
           "NW of the balanced split should be 36");
    const std::vector<int> items{0, 1, 2, 3, 4, 5};
    const auto result =
        max_welfare(inst, {0, 1}, items, WelfareKind::DisutilityNash);
    EXPECT(result.optimum == 36, "max dNW should be 36");
    return std::nullopt;
  });
  add("ex6.ratio", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example6_m4.json").instance;
    const std::vector<int> items{0, 1, 2, 3, 4, 5};
    PropertyQuery efx;
    efx.kind = PropertyQuery::Kind::EFX;
    const auto ratio = worst_case_ratio(inst, efx, WelfareKind::DisutilityNash,
                                        {0, 1}, items);
    EXPECT(ratio.fair_exists, "EFX allocations exist");
    EXPECT(ratio.fair_minimum == 32 && ratio.optimum == 36,
           "worst-case EFX ratio should be 32 against 36");
    EXPECT(geomean_approx_holds(ratio.fair_minimum, ratio.optimum,
                                ratio.agent_count, 1000, 1061),
           "the 1000/1061 geometric-mean bound should hold");
    EXPECT(!geomean_approx_holds(ratio.fair_minimum, ratio.optimum,
                                 ratio.agent_count, 1000, 1060),
           "the 1000/1060 geometric-mean bound should fail");
    return std::nullopt;
  });
  add("ex6.identical-solve", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "example6_m4.json").instance;
    const auto result = max_min_identical(inst);
    EXPECT(result.allocation.bundles ==
               bundles_1b(inst, {{1, 3, 5}, {2, 4, 6}}).bundles,
           "expected the balanced split, got " + show(result.allocation));
    EXPECT(disutility_nash_welfare(inst, result.allocation, {0, 1}) == 36,
           "output should maximize dNW");
    return std::nullopt;
  });

  // ----- lemma2 fixture: two goods only agent 1 likes, two pure bads -----
  add("lemma2.alg-binary", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "lemma2.json").instance;
    const auto n_set = largest_positive_set(inst);
    EXPECT(n_set == AgentSet({0}), "only agent 1 has positive edges");
    const auto alloc = alg_binary(inst, n_set);
    EXPECT(alloc.bundles == bundles_1b(inst, {{1, 2}, {}}).bundles,
           "both goods should go to agent 1");
    EXPECT(bundle_utility(inst, 0, alloc.bundles[0]) == 2,
           "agent 1 should end at utility 2");
    return std::nullopt;
  });
  add("lemma2.round-robin", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "lemma2.json").instance;
    const auto base = bundles_1b(inst, {{1, 2}, {}});
    const auto extended = round_robin_bads(inst, {0, 1}, {2, 3}, base);
    EXPECT(extended.bundles == bundles_1b(inst, {{1, 2, 3}, {4}}).bundles,
           "bad 3 should go to agent 1 and bad 4 to agent 2");
    return std::nullopt;
  });
  add("lemma2.priority-order", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "lemma2.json").instance;
    const auto base = bundles_1b(inst, {{1, 2}, {}});
    const auto m_set = largest_feasible_bad_set(inst, {0}, base);
    EXPECT(m_set == AgentSet({0, 1}),
           "two bads and two agents force everyone to receive");
    EXPECT(max_min_priority_order(inst, m_set, base) ==
               std::vector<int>({0, 1}),
           "agent 1 (utility 2) should precede agent 2 (utility 0)");
    return std::nullopt;
  });
  add("lemma2.solve", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "lemma2.json").instance;
    const auto result = nash_max_min_tertiary(inst);
    EXPECT(result.allocation.bundles ==
               bundles_1b(inst, {{1, 2, 3}, {4}}).bundles,
           "expected [[1,2,3],[4]], got " + show(result.allocation));
    EXPECT(egalitarian_welfare(inst, result.allocation, {0, 1}) == -1,
           "egalitarian welfare of the output should be -1");
    EXPECT(check_efx3(inst, result.allocation).holds, "output should be EFX3");
    EXPECT(pareto_optimal_exhaustive(inst, result.allocation).pareto_optimal,
           "output should be Pareto optimal");
    return std::nullopt;
  });
  add("lemma2.max-ew", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "lemma2.json").instance;
    const std::vector<int> items{0, 1, 2, 3};
    const auto result =
        max_welfare(inst, {0, 1}, items, WelfareKind::Egalitarian);
    EXPECT(result.optimum == 0, "max egalitarian welfare should be 0");
    EXPECT(contains_allocation(result.optimizers,
                               bundles_1b(inst, {{1, 2, 3, 4}, {}})),
           "giving everything to agent 1 should attain it");
    return std::nullopt;
  });
  add("lemma2.nash-max-ew", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "lemma2.json").instance;
    const auto result = nash_max_tertiary(inst);
    EXPECT(result.allocation.bundles ==
               bundles_1b(inst, {{1, 2, 3, 4}, {}}).bundles,
           "expected [[1,2,3,4],[]], got " + show(result.allocation));
    EXPECT(egalitarian_welfare(inst, result.allocation, {0, 1}) == 0,
           "output should attain the maximal egalitarian welfare");
    return std::nullopt;
  });
  add("lemma2.efx3-vs-mew", [dir]() -> std::optional<std::string> {
    const auto inst = load_instance(dir + "lemma2.json").instance;
    const std::vector<int> items{0, 1, 2, 3};
    const auto best =
        max_welfare(inst, {0, 1}, items, WelfareKind::Egalitarian);
    AllocationEnumerator enumerator(inst.n, {0, 1}, items);
    while (auto alloc = enumerator.next()) {
      if (egalitarian_welfare(inst, *alloc, {0, 1}) == best.optimum &&
          check_efx3(inst, *alloc).holds) {
        return std::string("found an allocation that is both EFX3 and "
                           "egalitarian-optimal: ") +
               show(*alloc);
      }
    }
    return std::nullopt;
  });

  // ----- leximin spot-check on a seeded identical pure-goods instance -----
  add("leximin.pure-goods", [options]() -> std::optional<std::string> {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> m_dist(2, 6);
    std::uniform_int_distribution<long long> value(1, 20);
    const int n = 2 + static_cast<int>(rng() % 2);
    const int m = m_dist(rng);
    std::vector<long long> row(m);
    for (auto& v : row) v = value(rng);
    const Instance inst(std::vector<std::vector<long long>>(n, row));
    AgentSet everyone(n);
    for (int a = 0; a < n; ++a) everyone[a] = a;
    std::vector<int> items(m);
    for (int o = 0; o < m; ++o) items[o] = o;
    const auto chosen = leximin(inst, everyone, items);
    EXPECT(check_efx(inst, chosen).holds, "leximin output should be EFX");
    const auto best = max_welfare(inst, everyone, items, WelfareKind::Nash);
    EXPECT(geomean_approx_holds(nash_welfare(inst, chosen, everyone),
                                best.optimum, n, 1000, 1061),
           "leximin output should satisfy the 1000/1061 NW bound");
    return std::nullopt;
  });

  return assertions;
}

#undef EXPECT

}  // namespace

int run_paper_examples(const PaperExamplesOptions& options) {
  const auto assertions = build_assertions(options);
  nlohmann::json results = nlohmann::json::array();
  std::vector<std::string> failures;
  for (const auto& assertion : assertions) {
    const auto error = assertion.run();
    if (options.json) {
      nlohmann::json entry = {{"id", assertion.id},
                              {"pass", !error.has_value()}};
      if (error) entry["detail"] = *error;
      results.push_back(std::move(entry));
    } else if (error) {
      std::cout << "[FAIL] " << assertion.id << " — " << *error << "\n";
    } else {
      std::cout << "[PASS] " << assertion.id << "\n";
    }
    if (error) failures.push_back(assertion.id);
  }
  if (options.json) {
    std::cout << nlohmann::json{{"assertions", results},
                                {"all_pass", failures.empty()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << assertions.size() - failures.size() << "/"
              << assertions.size() << " assertions passed\n";
    if (!failures.empty()) {
      std::cout << "failed:";
      for (const auto& id : failures) std::cout << " " << id;
      std::cout << "\n";
    }
  }
  return failures.empty() ? 0 : 4;
}

}  // namespace fairdiv::cli
