#pragma once

#include "fairdiv/model.hpp"

// Agent-set preprocessing for the solvers: the largest set of agents that can
// simultaneously receive positive utility (via bipartite maximum matching),
// the bad-receiver set nested with it, and the max-min priority order.

namespace fairdiv {

// Agents covered by a maximum matching of the bipartite graph with an edge
// (a, o) whenever o is a mixed good and u_a(o) > 0. Hopcroft-Karp with
// adjacency and augmentation scans in ascending index order, so the covered
// set is deterministic. Empty when there are no mixed goods.
AgentSet largest_positive_set(const Instance& inst);

// Bad-receiver set of size min(m-, n), nested with N:
//   m- >= n          -> all agents;
//   m- <= |N|        -> the m- agents of N with highest utility in `current`
//                       (ties by ascending index);
//   |N| < m- < n     -> N plus the lowest-index agents outside N.
// Empty when there are no pure bads.
AgentSet largest_feasible_bad_set(const Instance& inst, const AgentSet& N,
                                  const Allocation& current);

// Agents of M ordered by u_a(A_a) non-increasing, ties by ascending index.
std::vector<int> max_min_priority_order(const Instance& inst, const AgentSet& M,
                                        const Allocation& alloc);

}  // namespace fairdiv
