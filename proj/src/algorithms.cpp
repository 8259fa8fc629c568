#include "fairdiv/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fairdiv/matching.hpp"

namespace fairdiv {

namespace {

long long require_tertiary(const Instance& inst, const char* what) {
  const auto cls = detect_utility_class(inst);
  if (!cls.is_tertiary()) {
    throw precondition_error(std::string(what) +
                             " requires tertiary utilities, instance is " +
                             utility_class_name(cls));
  }
  return cls.alpha;
}

void require_identical(const Instance& inst, const char* what) {
  const auto cls = detect_utility_class(inst);
  if (!cls.is_identical()) {
    throw precondition_error(std::string(what) +
                             " requires identical utilities, instance is " +
                             utility_class_name(cls));
  }
}

void insert_item(std::vector<int>& bundle, int item) {
  bundle.insert(std::upper_bound(bundle.begin(), bundle.end(), item), item);
}

void erase_item(std::vector<int>& bundle, int item) {
  bundle.erase(std::find(bundle.begin(), bundle.end(), item));
}

void assign(Allocation& alloc, int item, int agent) {
  insert_item(alloc.bundles[agent], item);
  insert_item(alloc.scope, item);
}

void log_event(AlgorithmTrace* trace, const Instance& inst,
               const Allocation& alloc, int item, int agent,
               AllocationPhase phase) {
  if (!trace) return;
  trace->events.push_back({item, agent, phase, utility_profile(inst, alloc)});
}

int richest_agent(const std::vector<long long>& profile) {
  int best = 0;
  for (int a = 1; a < static_cast<int>(profile.size()); ++a) {
    if (profile[a] > profile[best]) best = a;
  }
  return best;
}

int poorest_agent(const std::vector<long long>& profile) {
  int best = 0;
  for (int a = 1; a < static_cast<int>(profile.size()); ++a) {
    if (profile[a] < profile[best]) best = a;
  }
  return best;
}

// One utility-improving shift along a shortest exchange path; returns false
// at the fixpoint. Bundles hold only items their holder values at alpha, so
// the path tail loses alpha, the head gains alpha and everyone in between is
// unchanged.
bool improve_once(const Instance& inst, const AgentSet& members,
                  long long alpha, Allocation& alloc, AlgorithmTrace* trace) {
  const int k = static_cast<int>(members.size());
  std::vector<long long> util(k);
  for (int i = 0; i < k; ++i) {
    util[i] = bundle_utility_i64(inst, members[i], alloc.bundles[members[i]]);
  }
  // edge i -> j iff agent members[j] values some item held by members[i]
  std::vector<std::vector<bool>> edge(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    for (int o : alloc.bundles[members[i]]) {
      for (int j = 0; j < k; ++j) {
        if (j != i && inst.u[members[j]][o] == alpha) edge[i][j] = true;
      }
    }
  }

  std::vector<int> sources(k);
  for (int i = 0; i < k; ++i) sources[i] = i;
  std::sort(sources.begin(), sources.end(), [&](int a, int b) {
    if (util[a] != util[b]) return util[a] > util[b];
    return members[a] < members[b];
  });

  for (int source : sources) {
    // BFS restricted to agents no richer than the source; the first target
    // discovered is at minimal distance.
    std::vector<int> parent(k, -1);
    std::deque<int> queue{source};
    std::vector<bool> seen(k, false);
    seen[source] = true;
    int target = -1;
    while (!queue.empty() && target < 0) {
      int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < k; ++y) {
        if (seen[y] || !edge[x][y] || util[y] > util[source]) continue;
        seen[y] = true;
        parent[y] = x;
        if (util[source] >= util[y] + 2 * alpha) {
          target = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (target < 0) continue;

    std::vector<int> path;
    for (int x = target; x >= 0; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    // Choose the item for every edge before mutating anything; the path is
    // simple, so the choices come from pairwise distinct bundles.
    std::vector<int> moved(path.size() - 1, -1);
    for (std::size_t e = 0; e + 1 < path.size(); ++e) {
      for (int o : alloc.bundles[members[path[e]]]) {
        if (inst.u[members[path[e + 1]]][o] == alpha) {
          moved[e] = o;
          break;
        }
      }
    }
    for (std::size_t e = 0; e + 1 < path.size(); ++e) {
      erase_item(alloc.bundles[members[path[e]]], moved[e]);
      insert_item(alloc.bundles[members[path[e + 1]]], moved[e]);
      log_event(trace, inst, alloc, moved[e], members[path[e + 1]],
                AllocationPhase::MixedGoods);
    }
    return true;
  }
  return false;
}

}  // namespace

std::string phase_name(AllocationPhase phase) {
  switch (phase) {
    case AllocationPhase::MixedGoods: return "mixed-goods";
    case AllocationPhase::PureBads: return "pure-bads";
    case AllocationPhase::DummyBads: return "dummy-bads";
  }
  return "mixed-goods";
}

Allocation replay_trace(const Instance& inst, const AlgorithmTrace& trace) {
  std::map<int, int> holder;
  for (const auto& event : trace.events) holder[event.item] = event.agent;
  Allocation alloc = empty_allocation(inst.n);
  for (const auto& [item, agent] : holder) assign(alloc, item, agent);
  return alloc;
}

Allocation alg_binary(const Instance& inst, const AgentSet& N,
                      const std::optional<Allocation>& initial,
                      AlgorithmTrace* trace) {
  const long long alpha = require_tertiary(inst, "alg-binary");
  const auto goods = partition_items(inst).mixed_goods;
  Allocation alloc = empty_allocation(inst.n);
  if (goods.empty()) return alloc;
  if (N.empty()) {
    throw std::invalid_argument(
        "alg-binary needs a non-empty agent set when mixed goods exist");
  }
  if (initial) {
    if (initial->scope != goods) {
      throw std::invalid_argument(
          "initial allocation must cover exactly the mixed goods");
    }
    alloc = *initial;
  } else {
    for (int o : goods) assign(alloc, o, N.front());
  }

  // Park every good with the lowest-index agent of N that values it.
  for (int o : goods) {
    int owner = -1;
    for (int a = 0; a < inst.n; ++a) {
      if (!alloc.bundles[a].empty() &&
          std::binary_search(alloc.bundles[a].begin(), alloc.bundles[a].end(),
                             o)) {
        owner = a;
        break;
      }
    }
    int wanted = -1;
    for (int a : N) {
      if (inst.u[a][o] == alpha) {
        wanted = a;
        break;
      }
    }
    if (wanted < 0) {
      throw std::invalid_argument(
          "mixed good " + std::to_string(o + 1) +
          " is not valued positively by any agent of the given set");
    }
    if (owner != wanted) {
      if (owner >= 0) erase_item(alloc.bundles[owner], o);
      insert_item(alloc.bundles[wanted], o);
    }
    log_event(trace, inst, alloc, o, wanted, AllocationPhase::MixedGoods);
  }

  while (improve_once(inst, N, alpha, alloc, trace)) {
  }
  return alloc;
}

Allocation round_robin_bads(const Instance& inst,
                            const std::vector<int>& order,
                            const std::vector<int>& bads,
                            const Allocation& base, AlgorithmTrace* trace) {
  if (bads.empty()) return base;
  if (order.empty()) {
    throw std::invalid_argument(
        "round-robin needs at least one receiver for a non-empty bad list");
  }
  std::vector<int> sorted_bads = bads;
  std::sort(sorted_bads.begin(), sorted_bads.end());
  Allocation alloc = base;
  std::size_t turn = 0;
  for (int o : sorted_bads) {
    int agent = order[turn % order.size()];
    ++turn;
    assign(alloc, o, agent);
    log_event(trace, inst, alloc, o, agent, AllocationPhase::PureBads);
  }
  return alloc;
}

namespace {

void place_dummy_bads(const Instance& inst, const std::vector<int>& dummies,
                      Allocation& alloc, AlgorithmTrace* trace) {
  for (int o : dummies) {
    for (int a = 0; a < inst.n; ++a) {
      if (inst.u[a][o] == 0) {
        assign(alloc, o, a);
        log_event(trace, inst, alloc, o, a, AllocationPhase::DummyBads);
        break;
      }
    }
  }
}

}  // namespace

SolveResult nash_max_tertiary(const Instance& inst) {
  require_tertiary(inst, "nash-max-tertiary");
  const auto part = partition_items(inst);
  SolveResult result;
  result.allocation = empty_allocation(inst.n);
  if (!part.mixed_goods.empty()) {
    result.positive_set = largest_positive_set(inst);
    result.allocation =
        alg_binary(inst, result.positive_set, std::nullopt, &result.trace);
  }
  for (int o : part.pure_bads) {
    const auto profile = utility_profile(inst, result.allocation);
    const int agent = richest_agent(profile);
    assign(result.allocation, o, agent);
    log_event(&result.trace, inst, result.allocation, o, agent,
              AllocationPhase::PureBads);
  }
  place_dummy_bads(inst, part.dummy_bads, result.allocation, &result.trace);
  return result;
}

SolveResult nash_max_min_tertiary(const Instance& inst,
                                  const NashMaxMinOptions& options) {
  require_tertiary(inst, "nash-max-min-tertiary");
  const auto part = partition_items(inst);
  SolveResult result;
  result.allocation = empty_allocation(inst.n);
  if (!part.mixed_goods.empty()) {
    result.positive_set = largest_positive_set(inst);
    result.allocation =
        alg_binary(inst, result.positive_set, std::nullopt, &result.trace);
  }
  if (!part.pure_bads.empty()) {
    result.bad_receivers =
        options.forced_bad_receivers
            ? *options.forced_bad_receivers
            : largest_feasible_bad_set(inst, result.positive_set,
                                       result.allocation);
    const auto order =
        max_min_priority_order(inst, result.bad_receivers, result.allocation);
    result.allocation = round_robin_bads(inst, order, part.pure_bads,
                                         result.allocation, &result.trace);
  }
  place_dummy_bads(inst, part.dummy_bads, result.allocation, &result.trace);
  return result;
}

SolveResult max_min_identical(const Instance& inst) {
  require_identical(inst, "max-min-identical");
  SolveResult result;
  result.allocation = empty_allocation(inst.n);
  std::vector<int> order(inst.m);
  for (int o = 0; o < inst.m; ++o) order[o] = o;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const long long va = std::abs(inst.u[0][a]);
    const long long vb = std::abs(inst.u[0][b]);
    if (va != vb) return va > vb;
    return a < b;
  });
  for (int o : order) {
    const auto profile = utility_profile(inst, result.allocation);
    const long long value = inst.u[0][o];
    const int agent =
        value < 0 ? richest_agent(profile) : poorest_agent(profile);
    assign(result.allocation, o, agent);
    log_event(&result.trace, inst, result.allocation, o, agent,
              value < 0 ? AllocationPhase::PureBads
              : value > 0 ? AllocationPhase::MixedGoods
                          : AllocationPhase::DummyBads);
  }
  return result;
}

}  // namespace fairdiv
