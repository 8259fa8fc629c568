#include "fairdiv/oracle.hpp"

#include <algorithm>

namespace fairdiv {

namespace {

void require_receivers(int n, const AgentSet& receivers) {
  for (std::size_t i = 0; i < receivers.size(); ++i) {
    if (receivers[i] < 0 || receivers[i] >= n) {
      throw std::out_of_range("agent index " +
                              std::to_string(receivers[i] + 1) +
                              " out of range [1," + std::to_string(n) + "]");
    }
    if (i > 0 && receivers[i] <= receivers[i - 1]) {
      throw std::invalid_argument(
          "receiver set must be strictly ascending");
    }
  }
}

}  // namespace

AllocationEnumerator::AllocationEnumerator(int n_agents, AgentSet receivers,
                                           std::vector<int> items,
                                           long long cap)
    : n_(n_agents), receivers_(std::move(receivers)), items_(std::move(items)) {
  require_receivers(n_, receivers_);
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  if (items_.empty()) {
    total_ = 1;  // the empty allocation
  } else if (receivers_.empty()) {
    total_ = 0;
    exhausted_ = true;
  } else {
    total_ = boost::multiprecision::pow(
        ExactValue(static_cast<long long>(receivers_.size())),
        static_cast<unsigned>(items_.size()));
  }
  if (total_ > cap) {
    throw cap_exceeded("enumeration of " + total_.str() +
                           " allocations exceeds the cap of " +
                           std::to_string(cap),
                       total_);
  }
  digits_.assign(items_.size(), 0);
}

std::optional<Allocation> AllocationEnumerator::next() {
  if (exhausted_) return std::nullopt;
  Allocation alloc = empty_allocation(n_);
  alloc.scope = items_;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    alloc.bundles[receivers_[digits_[i]]].push_back(items_[i]);
  }
  // Odometer increment from the last item, so assignment tuples come out in
  // lexicographic order.
  exhausted_ = true;
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < static_cast<int>(receivers_.size())) {
      exhausted_ = false;
      break;
    }
    digits_[i] = 0;
  }
  if (digits_.empty()) exhausted_ = true;
  return alloc;
}

namespace {

OracleResult optimize_welfare(const Instance& inst, const AgentSet& agents,
                              const std::vector<int>& items, WelfareKind kind,
                              bool maximize, bool require_each_agent_nonempty,
                              long long cap) {
  if (agents.empty()) {
    throw std::invalid_argument("welfare over an empty agent set is undefined");
  }
  OracleResult result;
  result.objective = kind;
  result.maximize = maximize;
  result.agents = agents;
  result.items = items;

  AllocationEnumerator enumerator(inst.n, agents, items, cap);
  result.total_allocations = enumerator.total_count();
  bool seeded = false;
  while (auto alloc = enumerator.next()) {
    if (require_each_agent_nonempty) {
      bool feasible = true;
      for (int a : agents) {
        if (alloc->bundles[a].empty()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
    }
    ExactValue value = welfare_value(inst, *alloc, agents, kind);
    bool better =
        !seeded || (maximize ? value > result.optimum : value < result.optimum);
    if (better) {
      result.optimum = value;
      result.optimizers.clear();
      result.optimizer_count = 0;
      seeded = true;
    }
    if (value == result.optimum) {
      ++result.optimizer_count;
      if (result.optimizers.size() <
          static_cast<std::size_t>(kMaxStoredOptimizers)) {
        result.optimizers.push_back(std::move(*alloc));
      }
    }
  }
  if (!seeded) {
    throw std::invalid_argument(
        "no allocation satisfies the at-least-one-item constraint");
  }
  return result;
}

}  // namespace

OracleResult max_welfare(const Instance& inst, const AgentSet& agents,
                         const std::vector<int>& items, WelfareKind kind,
                         long long cap) {
  return optimize_welfare(inst, agents, items, kind, /*maximize=*/true,
                          /*require_each_agent_nonempty=*/false, cap);
}

OracleResult min_welfare(const Instance& inst, const AgentSet& agents,
                         const std::vector<int>& items, WelfareKind kind,
                         bool require_each_agent_nonempty, long long cap) {
  return optimize_welfare(inst, agents, items, kind, /*maximize=*/false,
                          require_each_agent_nonempty, cap);
}

ParetoResult pareto_optimal_exhaustive(const Instance& inst,
                                       const Allocation& alloc,
                                       long long cap) {
  require_valid(inst, alloc);
  AgentSet everyone(inst.n);
  for (int a = 0; a < inst.n; ++a) everyone[a] = a;
  const auto base = utility_profile(inst, alloc);

  AllocationEnumerator enumerator(inst.n, everyone, alloc.scope, cap);
  while (auto candidate = enumerator.next()) {
    const auto profile = utility_profile(inst, *candidate);
    bool weakly_better = true;
    bool strictly_better = false;
    for (int a = 0; a < inst.n; ++a) {
      if (profile[a] < base[a]) {
        weakly_better = false;
        break;
      }
      if (profile[a] > base[a]) strictly_better = true;
    }
    if (weakly_better && strictly_better) {
      return {false, std::move(*candidate)};
    }
  }
  return {true, std::nullopt};
}

std::optional<Allocation> find_fair(const Instance& inst,
                                    const PropertyQuery& property,
                                    const AgentSet& agents,
                                    const std::vector<int>& items,
                                    long long cap) {
  AllocationEnumerator enumerator(inst.n, agents, items, cap);
  while (auto alloc = enumerator.next()) {
    if (check_property(inst, *alloc, property).holds) return alloc;
  }
  return std::nullopt;
}

Allocation leximin(const Instance& inst, const AgentSet& agents,
                   const std::vector<int>& items, long long cap) {
  if (agents.empty()) {
    throw std::invalid_argument("leximin over an empty agent set is undefined");
  }
  AllocationEnumerator enumerator(inst.n, agents, items, cap);
  std::optional<Allocation> best;
  std::vector<long long> best_profile;
  while (auto alloc = enumerator.next()) {
    std::vector<long long> profile;
    profile.reserve(agents.size());
    for (int a : agents) {
      profile.push_back(bundle_utility_i64(inst, a, alloc->bundles[a]));
    }
    std::sort(profile.begin(), profile.end());
    if (!best || profile > best_profile) {
      best = std::move(*alloc);
      best_profile = std::move(profile);
    }
  }
  if (!best) {
    throw std::invalid_argument("no allocation to choose from");
  }
  return *best;
}

WorstCaseRatio worst_case_ratio(const Instance& inst,
                                const PropertyQuery& property, WelfareKind kind,
                                const AgentSet& agents,
                                const std::vector<int>& items, long long cap) {
  if (agents.empty()) {
    throw std::invalid_argument("welfare over an empty agent set is undefined");
  }
  WorstCaseRatio result;
  result.agent_count = static_cast<int>(agents.size());

  AllocationEnumerator enumerator(inst.n, agents, items, cap);
  bool seeded = false;
  while (auto alloc = enumerator.next()) {
    ExactValue value = welfare_value(inst, *alloc, agents, kind);
    if (!seeded || value > result.optimum) result.optimum = value;
    seeded = true;
    if (check_property(inst, *alloc, property).holds) {
      if (!result.fair_exists || value < result.fair_minimum) {
        result.fair_minimum = value;
      }
      result.fair_exists = true;
      ++result.fair_count;
    }
  }
  if (!seeded) {
    throw std::invalid_argument("no allocation to measure");
  }
  return result;
}

}  // namespace fairdiv
