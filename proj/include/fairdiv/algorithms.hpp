#pragma once

#include <optional>

#include "fairdiv/model.hpp"

// The three greedy solvers plus their shared subroutines. All tie-breaking
// (richest/poorest agent, zero-valuing agent, item order) is by lowest index,
// so every run is deterministic and traces replay bit-exactly.

namespace fairdiv {

enum class AllocationPhase { MixedGoods, PureBads, DummyBads };

std::string phase_name(AllocationPhase phase);

// One assignment step: item moved to agent, with the utility profile of all
// agents after the step. An item may appear in several events when the
// exchange phase relocates it; the last event wins on replay.
struct TraceEvent {
  int item = 0;
  int agent = 0;
  AllocationPhase phase = AllocationPhase::MixedGoods;
  std::vector<long long> utilities;
};

struct AlgorithmTrace {
  std::vector<TraceEvent> events;
};

// Rebuilds the allocation a trace produced: each item ends up with the agent
// of its last event.
Allocation replay_trace(const Instance& inst, const AlgorithmTrace& trace);

// Exact Nash-welfare maximization of the mixed goods over the agent set N,
// for tertiary utilities (negative entries are treated as zero here; every
// relevant utility is then 0 or alpha).
//
// Starts from `initial` (defaults to all mixed goods in the first bundle),
// first parks every mixed good with the lowest-index agent of N valuing it
// alpha, then repeatedly improves: build the exchange digraph with an edge
// a -> b when b values some item held by a, and while some agent a that is
// richest along a path can reach an agent b with u_a >= u_b + 2*alpha,
// shift one item along a shortest such path (every edge hands one item from
// its tail to its head). Each shift strictly reduces the spread of the
// utility profile, so the loop terminates; at the fixpoint no product-
// improving transfer exists.
Allocation alg_binary(const Instance& inst, const AgentSet& N,
                      const std::optional<Allocation>& initial = std::nullopt,
                      AlgorithmTrace* trace = nullptr);

// Extends `base` by handing the bads out cyclically along `order`: ascending
// item index, receivers order[0], order[1], ... wrapping around. Receivers
// end up with floor(|bads|/|order|) or ceil(|bads|/|order|) of them.
Allocation round_robin_bads(const Instance& inst,
                            const std::vector<int>& order,
                            const std::vector<int>& bads,
                            const Allocation& base,
                            AlgorithmTrace* trace = nullptr);

struct SolveResult {
  Allocation allocation;
  AlgorithmTrace trace;
  AgentSet positive_set;   // N; empty when there are no mixed goods
  AgentSet bad_receivers;  // M; empty when there are no pure bads
};

// Tertiary instances. Mixed goods via alg_binary over the largest positive
// set, then each pure bad (ascending) to a currently richest agent, then each
// dummy bad to a lowest-index agent valuing it zero. The result is EFX,
// Pareto optimal and egalitarian-optimal over all items.
SolveResult nash_max_tertiary(const Instance& inst);

struct NashMaxMinOptions {
  // Overrides the computed bad-receiver set M. Exists so callers can observe
  // what goes wrong when the nesting constraint between N and M is violated;
  // the CLI never sets it.
  std::optional<AgentSet> forced_bad_receivers;
};

// Tertiary instances. Mixed goods as above; pure bads round-robin over the
// feasible bad-receiver set in max-min priority order; dummy bads to
// zero-valuing agents. The result is EFX on all items, on the mixed goods and
// on the pure bads simultaneously, and Pareto optimal; envy is bounded by
// alpha on each of the three scopes.
SolveResult nash_max_min_tertiary(const Instance& inst,
                                  const NashMaxMinOptions& options = {});

// Identical utilities. Items in non-increasing absolute utility; bads go to a
// currently richest agent, goods and dummies to a currently poorest one. The
// result is EFX, and Pareto optimal like every complete allocation here.
SolveResult max_min_identical(const Instance& inst);

}  // namespace fairdiv
