#pragma once

#include <optional>

#include "fairdiv/fairness.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/welfare.hpp"

// Exhaustive ground truth at desk scale: enumerate every complete allocation
// of an item set to a receiver set, compute exact welfare optima, decide
// Pareto optimality by dominance scan, search for fair allocations, and
// measure worst-case welfare ratios. Every operation refuses to start when
// the allocation count exceeds the cap instead of running silently forever.

namespace fairdiv {

inline constexpr int kMaxStoredOptimizers = 64;

// Raised before enumeration when |receivers|^|items| exceeds the cap; carries
// the exact allocation count.
struct cap_exceeded : std::runtime_error {
  ExactValue total_allocations;

  cap_exceeded(const std::string& message, ExactValue total)
      : std::runtime_error(message), total_allocations(std::move(total)) {}
};

// Streams the |receivers|^|items| complete allocations of `items` to
// `receivers` exactly once each, in lexicographic assignment order (the
// receiver of the highest item index varies fastest). Bundles of agents
// outside the receiver set stay empty.
class AllocationEnumerator {
 public:
  AllocationEnumerator(int n_agents, AgentSet receivers,
                       std::vector<int> items,
                       long long cap = kDefaultEnumerationCap);

  std::optional<Allocation> next();

  const ExactValue& total_count() const { return total_; }

 private:
  int n_;
  AgentSet receivers_;
  std::vector<int> items_;
  std::vector<int> digits_;  // digits_[i] indexes into receivers_
  bool exhausted_ = false;
  ExactValue total_ = 0;
};

struct OracleResult {
  WelfareKind objective = WelfareKind::Nash;
  bool maximize = true;
  AgentSet agents;
  std::vector<int> items;
  ExactValue optimum;
  // The first kMaxStoredOptimizers optima in enumeration order; the exact
  // number of optima is optimizer_count.
  std::vector<Allocation> optimizers;
  ExactValue optimizer_count = 0;
  ExactValue total_allocations = 0;
};

OracleResult max_welfare(const Instance& inst, const AgentSet& agents,
                         const std::vector<int>& items, WelfareKind kind,
                         long long cap = kDefaultEnumerationCap);

// As max_welfare with the order reversed. With require_each_agent_nonempty,
// only allocations giving every receiver at least one item compete; throws
// std::invalid_argument when no allocation satisfies the constraint.
OracleResult min_welfare(const Instance& inst, const AgentSet& agents,
                         const std::vector<int>& items, WelfareKind kind,
                         bool require_each_agent_nonempty = false,
                         long long cap = kDefaultEnumerationCap);

struct ParetoResult {
  bool pareto_optimal = true;
  // First dominator in enumeration order when not Pareto optimal.
  std::optional<Allocation> dominator;
};

// Dominance scan of alloc against every complete allocation of its scope to
// all n agents.
ParetoResult pareto_optimal_exhaustive(const Instance& inst,
                                       const Allocation& alloc,
                                       long long cap = kDefaultEnumerationCap);

// First allocation in enumeration order satisfying the property, or nullopt
// when none of the enumerated allocations does.
std::optional<Allocation> find_fair(const Instance& inst,
                                    const PropertyQuery& property,
                                    const AgentSet& agents,
                                    const std::vector<int>& items,
                                    long long cap = kDefaultEnumerationCap);

// Allocation whose ascending-sorted utility vector over `agents` is
// lexicographically maximal; ties resolved by enumeration order.
Allocation leximin(const Instance& inst, const AgentSet& agents,
                   const std::vector<int>& items,
                   long long cap = kDefaultEnumerationCap);

struct WorstCaseRatio {
  bool fair_exists = false;
  ExactValue fair_minimum;     // min welfare among property-satisfying allocations
  ExactValue optimum;          // max welfare over all allocations
  int agent_count = 0;         // root degree for geometric-mean comparisons
  ExactValue fair_count = 0;
};

// Worst welfare of a property-satisfying allocation against the exact
// optimum, reported as an integer pair for geometric-mean comparison via
// geomean_approx_holds.
WorstCaseRatio worst_case_ratio(const Instance& inst,
                                const PropertyQuery& property, WelfareKind kind,
                                const AgentSet& agents,
                                const std::vector<int>& items,
                                long long cap = kDefaultEnumerationCap);

}  // namespace fairdiv
