#include "fairdiv/model.hpp"

#include <algorithm>
#include <limits>

namespace fairdiv {

Instance::Instance(std::vector<std::vector<long long>> utilities)
    : u(std::move(utilities)) {
  if (u.empty()) {
    throw std::invalid_argument("instance needs at least one agent");
  }
  n = static_cast<int>(u.size());
  m = static_cast<int>(u.front().size());
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(u[a].size()) != m) {
      throw std::invalid_argument("utility matrix is ragged: agent " +
                                  std::to_string(a + 1) + " has " +
                                  std::to_string(u[a].size()) +
                                  " entries, expected " + std::to_string(m));
    }
    ExactValue abs_sum = 0;
    for (long long v : u[a]) abs_sum += v < 0 ? -ExactValue(v) : ExactValue(v);
    if (abs_sum > std::numeric_limits<long long>::max()) {
      throw std::invalid_argument(
          "utility magnitudes of agent " + std::to_string(a + 1) +
          " are too large: bundle sums must fit in a signed 64-bit value");
    }
  }
}

long long Instance::utility(int agent, int item) const {
  if (agent < 0 || agent >= n) {
    throw std::out_of_range("agent index " + std::to_string(agent + 1) +
                            " out of range [1," + std::to_string(n) + "]");
  }
  if (item < 0 || item >= m) {
    throw std::out_of_range("item index " + std::to_string(item + 1) +
                            " out of range [1," + std::to_string(m) + "]");
  }
  return u[agent][item];
}

std::vector<ItemClass> classify_items(const Instance& inst) {
  std::vector<ItemClass> classes(inst.m);
  for (int o = 0; o < inst.m; ++o) {
    bool any_positive = false;
    bool any_zero = false;
    bool all_positive = true;
    bool all_non_negative = true;
    for (int a = 0; a < inst.n; ++a) {
      long long v = inst.u[a][o];
      if (v > 0) any_positive = true;
      if (v == 0) any_zero = true;
      if (v <= 0) all_positive = false;
      if (v < 0) all_non_negative = false;
    }
    ItemClass& c = classes[o];
    if (any_positive) {
      c.kind = ItemKind::MixedGood;
      c.is_good = all_non_negative;
      c.is_pure_good = all_positive;
    } else if (any_zero) {
      c.kind = ItemKind::DummyBad;
    } else {
      c.kind = ItemKind::PureBad;
    }
  }
  return classes;
}

ItemPartition partition_items(const Instance& inst) {
  ItemPartition part;
  const auto classes = classify_items(inst);
  for (int o = 0; o < inst.m; ++o) {
    switch (classes[o].kind) {
      case ItemKind::MixedGood: part.mixed_goods.push_back(o); break;
      case ItemKind::PureBad: part.pure_bads.push_back(o); break;
      case ItemKind::DummyBad: part.dummy_bads.push_back(o); break;
    }
  }
  return part;
}

Allocation empty_allocation(int n) {
  Allocation alloc;
  alloc.bundles.resize(n);
  return alloc;
}

Allocation make_allocation(int n, std::vector<std::vector<int>> bundles) {
  Allocation alloc;
  alloc.bundles = std::move(bundles);
  alloc.bundles.resize(n);
  for (auto& bundle : alloc.bundles) {
    std::sort(bundle.begin(), bundle.end());
    alloc.scope.insert(alloc.scope.end(), bundle.begin(), bundle.end());
  }
  std::sort(alloc.scope.begin(), alloc.scope.end());
  return alloc;
}

Allocation restrict_to(const Allocation& alloc, const std::vector<int>& items) {
  Allocation out;
  out.bundles.resize(alloc.bundles.size());
  for (std::size_t a = 0; a < alloc.bundles.size(); ++a) {
    std::set_intersection(alloc.bundles[a].begin(), alloc.bundles[a].end(),
                          items.begin(), items.end(),
                          std::back_inserter(out.bundles[a]));
  }
  std::set_intersection(alloc.scope.begin(), alloc.scope.end(), items.begin(),
                        items.end(), std::back_inserter(out.scope));
  return out;
}

std::vector<std::string> validate_allocation(const Instance& inst,
                                             const Allocation& alloc) {
  std::vector<std::string> issues;
  if (static_cast<int>(alloc.bundles.size()) != inst.n) {
    issues.push_back("allocation has " + std::to_string(alloc.bundles.size()) +
                     " bundles, instance has " + std::to_string(inst.n) +
                     " agents");
    return issues;
  }
  // owner[o] = first agent seen holding item o
  std::vector<int> owner(inst.m, -1);
  for (int a = 0; a < inst.n; ++a) {
    for (int o : alloc.bundles[a]) {
      if (o < 0 || o >= inst.m) {
        issues.push_back("bundle of agent " + std::to_string(a + 1) +
                         " contains item " + std::to_string(o + 1) +
                         " outside [1," + std::to_string(inst.m) + "]");
        continue;
      }
      if (owner[o] == a) {
        issues.push_back("item " + std::to_string(o + 1) +
                         " appears twice in the bundle of agent " +
                         std::to_string(a + 1));
      } else if (owner[o] >= 0) {
        issues.push_back("item " + std::to_string(o + 1) +
                         " is held by agents " + std::to_string(owner[o] + 1) +
                         " and " + std::to_string(a + 1));
      }
      owner[o] = a;
    }
  }
  std::vector<bool> in_scope(inst.m, false);
  for (int o : alloc.scope) {
    if (o < 0 || o >= inst.m) {
      issues.push_back("scope contains item " + std::to_string(o + 1) +
                       " outside [1," + std::to_string(inst.m) + "]");
    } else {
      in_scope[o] = true;
    }
  }
  for (int o = 0; o < inst.m; ++o) {
    if (in_scope[o] && owner[o] < 0) {
      issues.push_back("item " + std::to_string(o + 1) + " is unallocated");
    }
    if (!in_scope[o] && owner[o] >= 0) {
      issues.push_back("item " + std::to_string(o + 1) +
                       " is allocated but not in scope");
    }
  }
  return issues;
}

void require_valid(const Instance& inst, const Allocation& alloc) {
  auto issues = validate_allocation(inst, alloc);
  if (!issues.empty()) {
    throw std::invalid_argument("invalid allocation: " + issues.front());
  }
}

ExactValue bundle_utility(const Instance& inst, int agent,
                          const std::vector<int>& items) {
  return ExactValue(bundle_utility_i64(inst, agent, items));
}

long long bundle_utility_i64(const Instance& inst, int agent,
                             const std::vector<int>& items) {
  long long sum = 0;
  for (int o : items) sum += inst.utility(agent, o);
  return sum;
}

std::vector<long long> utility_profile(const Instance& inst,
                                       const Allocation& alloc) {
  std::vector<long long> profile(inst.n, 0);
  for (int a = 0; a < inst.n && a < static_cast<int>(alloc.bundles.size());
       ++a) {
    profile[a] = bundle_utility_i64(inst, a, alloc.bundles[a]);
  }
  return profile;
}

UtilityClass detect_utility_class(const Instance& inst) {
  bool identical = true;
  long long max_abs = 0;
  for (int o = 0; o < inst.m && identical; ++o) {
    for (int a = 1; a < inst.n; ++a) {
      if (inst.u[a][o] != inst.u[0][o]) {
        identical = false;
        break;
      }
    }
  }
  for (int a = 0; a < inst.n; ++a) {
    for (int o = 0; o < inst.m; ++o) {
      long long v = inst.u[a][o] < 0 ? -inst.u[a][o] : inst.u[a][o];
      max_abs = std::max(max_abs, v);
    }
  }
  long long alpha = max_abs == 0 ? 1 : max_abs;
  bool tertiary = true;
  for (int a = 0; a < inst.n && tertiary; ++a) {
    for (int o = 0; o < inst.m; ++o) {
      long long v = inst.u[a][o];
      if (v != 0 && v != alpha && v != -alpha) {
        tertiary = false;
        break;
      }
    }
  }
  UtilityClass cls;
  if (identical && tertiary) {
    cls.kind = UtilityClass::Kind::IdenticalTertiary;
    cls.alpha = alpha;
  } else if (tertiary) {
    cls.kind = UtilityClass::Kind::Tertiary;
    cls.alpha = alpha;
  } else if (identical) {
    cls.kind = UtilityClass::Kind::Identical;
  } else {
    cls.kind = UtilityClass::Kind::General;
  }
  return cls;
}

std::string utility_class_name(const UtilityClass& cls) {
  switch (cls.kind) {
    case UtilityClass::Kind::General: return "general";
    case UtilityClass::Kind::Identical: return "identical";
    case UtilityClass::Kind::Tertiary: return "tertiary";
    case UtilityClass::Kind::IdenticalTertiary: return "identical-tertiary";
  }
  return "general";
}

}  // namespace fairdiv
