#pragma once

#include <optional>
#include <string>

#include "fairdiv/model.hpp"

// Exact welfare objectives over a designated agent set. The agent set is
// explicit because the solvers optimize over a largest matchable set rather
// than over all agents; pass all agents to get the plain welfare.

namespace fairdiv {

enum class WelfareKind { Nash, DisutilityNash, Egalitarian };

// "nw", "dnw", "ew".
std::optional<WelfareKind> parse_welfare(const std::string& name);
std::string welfare_name(WelfareKind kind);

// Product of u_a(A_a) over a in agents. Signed: products of negatives are
// meaningful and compared as plain integers.
ExactValue nash_welfare(const Instance& inst, const Allocation& alloc,
                        const AgentSet& agents);

// Product of -u_a(A_a) over a in agents.
ExactValue disutility_nash_welfare(const Instance& inst,
                                   const Allocation& alloc,
                                   const AgentSet& agents);

// Minimum of u_a(A_a) over a in agents.
ExactValue egalitarian_welfare(const Instance& inst, const Allocation& alloc,
                               const AgentSet& agents);

ExactValue welfare_value(const Instance& inst, const Allocation& alloc,
                         const AgentSet& agents, WelfareKind kind);

// Whether the n-th root of `val` is at least (ratio_num/ratio_den) times the
// n-th root of `opt`, decided exactly as val*den^n >= opt*num^n. Both
// welfares must be non-negative. The default ratio is 1000/1061.
bool geomean_approx_holds(const ExactValue& val, const ExactValue& opt,
                          int n_agents, long long ratio_num = 1000,
                          long long ratio_den = 1061);

}  // namespace fairdiv
