#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "fairdiv/fairness.hpp"
#include "fairdiv/model.hpp"

// Shared helpers for the randomized suites: seeded instance generators, an
// independent witness replayer and a brute-force matching oracle. Everything
// here re-derives results from the definitions rather than reusing library
// internals, so the suites cross-check rather than echo the implementation.

namespace fairdiv::test {

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(unsigned long long seed) : engine(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine);
  }
  long long uniform_ll(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine);
  }
};

inline Instance random_tertiary(Rng& rng, int n, int m, long long alpha) {
  std::vector<std::vector<long long>> u(n, std::vector<long long>(m));
  for (auto& row : u) {
    for (auto& v : row) v = alpha * (rng.uniform(-1, 1));
  }
  return Instance(std::move(u));
}

inline Instance random_identical(Rng& rng, int n, int m, long long max_abs) {
  std::vector<long long> row(m);
  for (auto& v : row) v = rng.uniform_ll(-max_abs, max_abs);
  return Instance(std::vector<std::vector<long long>>(n, row));
}

inline Instance random_identical_pure_goods(Rng& rng, int n, int m,
                                            long long max_value) {
  std::vector<long long> row(m);
  for (auto& v : row) v = rng.uniform_ll(1, max_value);
  return Instance(std::vector<std::vector<long long>>(n, row));
}

inline Instance random_identical_pure_bads(Rng& rng, int n, int m,
                                           long long max_value) {
  std::vector<long long> row(m);
  for (auto& v : row) v = rng.uniform_ll(-max_value, -1);
  return Instance(std::vector<std::vector<long long>>(n, row));
}

inline Instance random_general(Rng& rng, int n, int m, long long max_abs) {
  std::vector<std::vector<long long>> u(n, std::vector<long long>(m));
  for (auto& row : u) {
    for (auto& v : row) v = rng.uniform_ll(-max_abs, max_abs);
  }
  return Instance(std::move(u));
}

// Complete allocation of all items to uniformly random agents.
inline Allocation random_allocation(Rng& rng, const Instance& inst) {
  std::vector<std::vector<int>> bundles(inst.n);
  for (int o = 0; o < inst.m; ++o) {
    bundles[rng.uniform(0, inst.n - 1)].push_back(o);
  }
  return make_allocation(inst.n, std::move(bundles));
}

inline AgentSet all_agents(const Instance& inst) {
  AgentSet agents(inst.n);
  for (int a = 0; a < inst.n; ++a) agents[a] = a;
  return agents;
}

inline std::vector<int> all_items(const Instance& inst) {
  std::vector<int> items(inst.m);
  for (int o = 0; o < inst.m; ++o) items[o] = o;
  return items;
}

inline PropertyQuery query(PropertyQuery::Kind kind) {
  PropertyQuery q;
  q.kind = kind;
  return q;
}

// Replays a witness against the definitions. The layer selects which
// restriction of the allocation the inequality refers to.
inline bool witness_confirms(const Instance& inst, const Allocation& alloc,
                             const FairnessWitness& w) {
  Allocation layered = alloc;
  if (w.layer == "goods") {
    layered = restrict_to(alloc, partition_items(inst).mixed_goods);
  } else if (w.layer == "bads") {
    layered = restrict_to(alloc, partition_items(inst).pure_bads);
  } else if (w.layer != "full") {
    return false;
  }
  const auto& own_bundle = layered.bundles[w.envier];
  const auto& other_bundle = layered.bundles[w.envied];
  const long long own = bundle_utility_i64(inst, w.envier, own_bundle);
  const long long other = bundle_utility_i64(inst, w.envier, other_bundle);
  const auto held = [&](const std::vector<int>& bundle, int item) {
    return std::find(bundle.begin(), bundle.end(), item) != bundle.end();
  };
  if (w.code == "envy") return own < other;
  if (w.code == "envy-unremovable") {
    if (own >= other) return false;
    for (int o : own_bundle) {
      if (own - inst.u[w.envier][o] >= other) return false;
    }
    for (int o : other_bundle) {
      if (own >= other - inst.u[w.envier][o]) return false;
    }
    return true;
  }
  if (w.code == "own-bad") {
    return w.item && held(own_bundle, *w.item) && inst.u[w.envier][*w.item] < 0 &&
           own - inst.u[w.envier][*w.item] < other;
  }
  if (w.code == "other-good") {
    return w.item && held(other_bundle, *w.item) &&
           inst.u[w.envier][*w.item] > 0 &&
           own < other - inst.u[w.envier][*w.item];
  }
  return false;
}

inline bool all_witnesses_confirm(const Instance& inst,
                                  const Allocation& alloc,
                                  const FairnessReport& report) {
  for (const auto& w : report.witnesses) {
    if (!witness_confirms(inst, alloc, w)) return false;
  }
  return report.holds == report.witnesses.empty();
}

// Maximum matching size on the agents-to-mixed-goods graph by trying every
// subset of assignments; usable for n, m up to about 6.
inline int brute_force_matching_size(const Instance& inst) {
  const auto goods = partition_items(inst).mixed_goods;
  std::vector<std::vector<int>> adj(inst.n);
  for (int a = 0; a < inst.n; ++a) {
    for (std::size_t i = 0; i < goods.size(); ++i) {
      if (inst.u[a][goods[i]] > 0) adj[a].push_back(static_cast<int>(i));
    }
  }
  const auto recurse = [&](auto&& self, int a, unsigned used) -> int {
    if (a == inst.n) return 0;
    int best = self(self, a + 1, used);
    for (int i : adj[a]) {
      if (!(used >> i & 1u)) {
        best = std::max(best, 1 + self(self, a + 1, used | (1u << i)));
      }
    }
    return best;
  };
  return recurse(recurse, 0, 0u);
}

}  // namespace fairdiv::test
