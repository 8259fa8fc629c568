#include "fairdiv/welfare.hpp"

namespace fairdiv {

namespace {

void require_agents(const Instance& inst, const AgentSet& agents) {
  if (agents.empty()) {
    throw std::invalid_argument("welfare over an empty agent set is undefined");
  }
  for (int a : agents) {
    if (a < 0 || a >= inst.n) {
      throw std::out_of_range("agent index " + std::to_string(a + 1) +
                              " out of range [1," + std::to_string(inst.n) +
                              "]");
    }
  }
}

}  // namespace

std::optional<WelfareKind> parse_welfare(const std::string& name) {
  if (name == "nw") return WelfareKind::Nash;
  if (name == "dnw") return WelfareKind::DisutilityNash;
  if (name == "ew") return WelfareKind::Egalitarian;
  return std::nullopt;
}

std::string welfare_name(WelfareKind kind) {
  switch (kind) {
    case WelfareKind::Nash: return "nw";
    case WelfareKind::DisutilityNash: return "dnw";
    case WelfareKind::Egalitarian: return "ew";
  }
  return "nw";
}

ExactValue nash_welfare(const Instance& inst, const Allocation& alloc,
                        const AgentSet& agents) {
  require_agents(inst, agents);
  ExactValue product = 1;
  for (int a : agents) product *= bundle_utility_i64(inst, a, alloc.bundles[a]);
  return product;
}

ExactValue disutility_nash_welfare(const Instance& inst,
                                   const Allocation& alloc,
                                   const AgentSet& agents) {
  require_agents(inst, agents);
  ExactValue product = 1;
  for (int a : agents) product *= -bundle_utility_i64(inst, a, alloc.bundles[a]);
  return product;
}

ExactValue egalitarian_welfare(const Instance& inst, const Allocation& alloc,
                               const AgentSet& agents) {
  require_agents(inst, agents);
  long long best = bundle_utility_i64(inst, agents.front(),
                                      alloc.bundles[agents.front()]);
  for (int a : agents) {
    best = std::min(best, bundle_utility_i64(inst, a, alloc.bundles[a]));
  }
  return ExactValue(best);
}

ExactValue welfare_value(const Instance& inst, const Allocation& alloc,
                         const AgentSet& agents, WelfareKind kind) {
  switch (kind) {
    case WelfareKind::Nash: return nash_welfare(inst, alloc, agents);
    case WelfareKind::DisutilityNash:
      return disutility_nash_welfare(inst, alloc, agents);
    case WelfareKind::Egalitarian:
      return egalitarian_welfare(inst, alloc, agents);
  }
  throw std::invalid_argument("unknown welfare kind");
}

bool geomean_approx_holds(const ExactValue& val, const ExactValue& opt,
                          int n_agents, long long ratio_num,
                          long long ratio_den) {
  if (val < 0 || opt < 0) {
    throw std::invalid_argument(
        "geometric-mean comparison requires non-negative welfares");
  }
  if (n_agents < 1) {
    throw std::invalid_argument("geometric-mean comparison needs n >= 1");
  }
  if (ratio_num <= 0 || ratio_den <= 0) {
    throw std::invalid_argument("approximation ratio must be positive");
  }
  // n-th root of val >= (num/den) * n-th root of opt, raised to the n-th
  // power on both sides. No roots are ever computed.
  const unsigned n = static_cast<unsigned>(n_agents);
  return val * boost::multiprecision::pow(ExactValue(ratio_den), n) >=
         opt * boost::multiprecision::pow(ExactValue(ratio_num), n);
}

}  // namespace fairdiv
