#include "fairdiv/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace fairdiv {

namespace {

constexpr int kUnmatched = -1;
constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp over agents (left) and mixed-good positions (right).
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(std::vector<std::vector<int>> adjacency, int rights)
      : adj_(std::move(adjacency)),
        lefts_(static_cast<int>(adj_.size())),
        match_left_(lefts_, kUnmatched),
        match_right_(rights, kUnmatched),
        dist_(lefts_, kInf) {}

  // Returns the left vertices covered by the maximum matching, ascending.
  std::vector<int> solve() {
    while (bfs_layering()) {
      for (int a = 0; a < lefts_; ++a) {
        if (match_left_[a] == kUnmatched) augment(a);
      }
    }
    std::vector<int> covered;
    for (int a = 0; a < lefts_; ++a) {
      if (match_left_[a] != kUnmatched) covered.push_back(a);
    }
    return covered;
  }

 private:
  bool bfs_layering() {
    std::queue<int> queue;
    bool reachable_free_right = false;
    for (int a = 0; a < lefts_; ++a) {
      if (match_left_[a] == kUnmatched) {
        dist_[a] = 0;
        queue.push(a);
      } else {
        dist_[a] = kInf;
      }
    }
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop();
      for (int o : adj_[a]) {
        int b = match_right_[o];
        if (b == kUnmatched) {
          reachable_free_right = true;
        } else if (dist_[b] == kInf) {
          dist_[b] = dist_[a] + 1;
          queue.push(b);
        }
      }
    }
    return reachable_free_right;
  }

  bool augment(int a) {
    for (int o : adj_[a]) {
      int b = match_right_[o];
      if (b == kUnmatched || (dist_[b] == dist_[a] + 1 && augment(b))) {
        match_left_[a] = o;
        match_right_[o] = a;
        return true;
      }
    }
    dist_[a] = kInf;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  int lefts_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace

AgentSet largest_positive_set(const Instance& inst) {
  const auto part = partition_items(inst);
  std::vector<std::vector<int>> adj(inst.n);
  for (int a = 0; a < inst.n; ++a) {
    for (std::size_t i = 0; i < part.mixed_goods.size(); ++i) {
      if (inst.u[a][part.mixed_goods[i]] > 0) {
        adj[a].push_back(static_cast<int>(i));
      }
    }
  }
  return BipartiteMatcher(std::move(adj),
                          static_cast<int>(part.mixed_goods.size()))
      .solve();
}

AgentSet largest_feasible_bad_set(const Instance& inst, const AgentSet& N,
                                  const Allocation& current) {
  const auto part = partition_items(inst);
  const int bad_count = static_cast<int>(part.pure_bads.size());
  if (bad_count == 0) return {};
  if (bad_count >= inst.n) {
    AgentSet all(inst.n);
    for (int a = 0; a < inst.n; ++a) all[a] = a;
    return all;
  }
  if (bad_count <= static_cast<int>(N.size())) {
    // Bads go to the currently richest agents of N.
    const auto profile = utility_profile(inst, current);
    AgentSet ranked = N;
    std::stable_sort(ranked.begin(), ranked.end(), [&](int a, int b) {
      if (profile[a] != profile[b]) return profile[a] > profile[b];
      return a < b;
    });
    ranked.resize(bad_count);
    std::sort(ranked.begin(), ranked.end());
    return ranked;
  }
  // |N| < m- < n: extend N with the lowest-index agents outside it.
  AgentSet result = N;
  std::vector<bool> in_n(inst.n, false);
  for (int a : N) in_n[a] = true;
  for (int a = 0; a < inst.n && static_cast<int>(result.size()) < bad_count;
       ++a) {
    if (!in_n[a]) result.push_back(a);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> max_min_priority_order(const Instance& inst, const AgentSet& M,
                                        const Allocation& alloc) {
  const auto profile = utility_profile(inst, alloc);
  std::vector<int> order = M;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (profile[a] != profile[b]) return profile[a] > profile[b];
    return a < b;
  });
  return order;
}

}  // namespace fairdiv
