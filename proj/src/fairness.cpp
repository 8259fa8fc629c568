#include "fairdiv/fairness.hpp"

#include <algorithm>
#include <numeric>

#include "fairdiv/oracle.hpp"

namespace fairdiv {

namespace {

// cross[a][b] = u_a(A_b), computed once per check.
std::vector<std::vector<long long>> cross_utilities(const Instance& inst,
                                                    const Allocation& alloc) {
  std::vector<std::vector<long long>> cross(
      inst.n, std::vector<long long>(inst.n, 0));
  for (int a = 0; a < inst.n; ++a) {
    for (int b = 0; b < inst.n; ++b) {
      cross[a][b] = bundle_utility_i64(inst, a, alloc.bundles[b]);
    }
  }
  return cross;
}

void append_ef_witnesses(const Instance& inst, const Allocation& alloc,
                         const std::string& layer,
                         std::vector<FairnessWitness>& out) {
  const auto cross = cross_utilities(inst, alloc);
  for (int a = 0; a < inst.n; ++a) {
    for (int b = 0; b < inst.n; ++b) {
      if (a == b) continue;
      if (cross[a][a] < cross[a][b]) {
        out.push_back({a, b, std::nullopt, layer, "envy"});
      }
    }
  }
}

void append_ef1_witnesses(const Instance& inst, const Allocation& alloc,
                          const std::string& layer,
                          std::vector<FairnessWitness>& out) {
  const auto cross = cross_utilities(inst, alloc);
  for (int a = 0; a < inst.n; ++a) {
    for (int b = 0; b < inst.n; ++b) {
      if (a == b) continue;
      const long long own = cross[a][a];
      const long long other = cross[a][b];
      if (own >= other) continue;
      bool removable = false;
      for (int o : alloc.bundles[a]) {
        if (own - inst.u[a][o] >= other) {
          removable = true;
          break;
        }
      }
      if (!removable) {
        for (int o : alloc.bundles[b]) {
          if (own >= other - inst.u[a][o]) {
            removable = true;
            break;
          }
        }
      }
      if (!removable) {
        out.push_back({a, b, std::nullopt, layer, "envy-unremovable"});
      }
    }
  }
}

void append_efx_witnesses(const Instance& inst, const Allocation& alloc,
                          const std::string& layer,
                          std::vector<FairnessWitness>& out) {
  const auto cross = cross_utilities(inst, alloc);
  for (int a = 0; a < inst.n; ++a) {
    for (int b = 0; b < inst.n; ++b) {
      if (a == b) continue;
      const long long own = cross[a][a];
      const long long other = cross[a][b];
      for (int o : alloc.bundles[a]) {
        if (inst.u[a][o] < 0 && own - inst.u[a][o] < other) {
          out.push_back({a, b, o, layer, "own-bad"});
        }
      }
      for (int o : alloc.bundles[b]) {
        if (inst.u[a][o] > 0 && own < other - inst.u[a][o]) {
          out.push_back({a, b, o, layer, "other-good"});
        }
      }
    }
  }
}

void append_witnesses(const Instance& inst, const Allocation& alloc,
                      Fairness f, const std::string& layer,
                      std::vector<FairnessWitness>& out) {
  switch (f) {
    case Fairness::EF: append_ef_witnesses(inst, alloc, layer, out); break;
    case Fairness::EF1: append_ef1_witnesses(inst, alloc, layer, out); break;
    case Fairness::EFX: append_efx_witnesses(inst, alloc, layer, out); break;
  }
}

FairnessReport single_layer_report(const Instance& inst,
                                   const Allocation& alloc, Fairness f,
                                   std::string property) {
  require_valid(inst, alloc);
  FairnessReport report;
  report.property = std::move(property);
  append_witnesses(inst, alloc, f, "full", report.witnesses);
  report.holds = report.witnesses.empty();
  return report;
}

FairnessReport layered_report(const Instance& inst, const Allocation& alloc,
                              Fairness x, Fairness y, Fairness z,
                              std::string property) {
  require_valid(inst, alloc);
  FairnessReport report;
  report.property = std::move(property);
  const auto part = partition_items(inst);
  append_witnesses(inst, alloc, x, "full", report.witnesses);
  append_witnesses(inst, restrict_to(alloc, part.mixed_goods), y, "goods",
                   report.witnesses);
  append_witnesses(inst, restrict_to(alloc, part.pure_bads), z, "bads",
                   report.witnesses);
  report.holds = report.witnesses.empty();
  return report;
}

}  // namespace

std::string fairness_name(Fairness f) {
  switch (f) {
    case Fairness::EF: return "ef";
    case Fairness::EF1: return "ef1";
    case Fairness::EFX: return "efx";
  }
  return "ef";
}

FairnessReport check_ef(const Instance& inst, const Allocation& alloc) {
  return single_layer_report(inst, alloc, Fairness::EF, "ef");
}

FairnessReport check_ef1(const Instance& inst, const Allocation& alloc) {
  return single_layer_report(inst, alloc, Fairness::EF1, "ef1");
}

FairnessReport check_efx(const Instance& inst, const Allocation& alloc) {
  return single_layer_report(inst, alloc, Fairness::EFX, "efx");
}

FairnessReport check_efx3(const Instance& inst, const Allocation& alloc) {
  return layered_report(inst, alloc, Fairness::EFX, Fairness::EFX,
                        Fairness::EFX, "efx3");
}

FairnessReport check_xyz(const Instance& inst, const Allocation& alloc,
                         Fairness x, Fairness y, Fairness z) {
  return layered_report(inst, alloc, x, y, z,
                        "xyz:" + fairness_name(x) + ":" + fairness_name(y) +
                            ":" + fairness_name(z));
}

bool check_po(const Instance& inst, const Allocation& alloc,
              PoStrategy strategy, long long cap) {
  require_valid(inst, alloc);
  const auto cls = detect_utility_class(inst);
  switch (strategy) {
    case PoStrategy::IdenticalFast: {
      if (!cls.is_identical()) {
        throw precondition_error(
            "identical-fast PO requires identical utilities, instance is " +
            utility_class_name(cls));
      }
      // The utilitarian sum of a complete allocation of this scope is fixed,
      // so nobody can gain without someone losing.
      return true;
    }
    case PoStrategy::TertiaryFast: {
      if (!cls.is_tertiary()) {
        throw precondition_error(
            "tertiary-fast PO requires tertiary utilities, instance is " +
            utility_class_name(cls));
      }
      const auto classes = classify_items(inst);
      long long ceiling = 0;
      for (int o : alloc.scope) {
        if (classes[o].kind == ItemKind::MixedGood) ceiling += cls.alpha;
        if (classes[o].kind == ItemKind::PureBad) ceiling -= cls.alpha;
      }
      const auto profile = utility_profile(inst, alloc);
      const long long sum =
          std::accumulate(profile.begin(), profile.end(), 0LL);
      return sum == ceiling;
    }
    case PoStrategy::Exhaustive:
      return pareto_optimal_exhaustive(inst, alloc, cap).pareto_optimal;
  }
  throw std::invalid_argument("unknown PO strategy");
}

std::optional<PropertyQuery> parse_property(const std::string& name) {
  PropertyQuery query;
  if (name == "ef") {
    query.kind = PropertyQuery::Kind::EF;
    return query;
  }
  if (name == "ef1") {
    query.kind = PropertyQuery::Kind::EF1;
    return query;
  }
  if (name == "efx") {
    query.kind = PropertyQuery::Kind::EFX;
    return query;
  }
  if (name == "efx3") {
    query.kind = PropertyQuery::Kind::EFX3;
    return query;
  }
  if (name.rfind("xyz:", 0) == 0) {
    std::vector<std::string> parts;
    std::string rest = name.substr(4);
    std::size_t pos;
    while ((pos = rest.find(':')) != std::string::npos) {
      parts.push_back(rest.substr(0, pos));
      rest = rest.substr(pos + 1);
    }
    parts.push_back(rest);
    if (parts.size() != 3) return std::nullopt;
    Fairness components[3];
    for (int i = 0; i < 3; ++i) {
      if (parts[i] == "ef") components[i] = Fairness::EF;
      else if (parts[i] == "ef1") components[i] = Fairness::EF1;
      else if (parts[i] == "efx") components[i] = Fairness::EFX;
      else return std::nullopt;
    }
    query.kind = PropertyQuery::Kind::XYZ;
    query.x = components[0];
    query.y = components[1];
    query.z = components[2];
    return query;
  }
  return std::nullopt;
}

std::string property_name(const PropertyQuery& query) {
  switch (query.kind) {
    case PropertyQuery::Kind::EF: return "ef";
    case PropertyQuery::Kind::EF1: return "ef1";
    case PropertyQuery::Kind::EFX: return "efx";
    case PropertyQuery::Kind::EFX3: return "efx3";
    case PropertyQuery::Kind::XYZ:
      return "xyz:" + fairness_name(query.x) + ":" + fairness_name(query.y) +
             ":" + fairness_name(query.z);
  }
  return "ef";
}

FairnessReport check_property(const Instance& inst, const Allocation& alloc,
                              const PropertyQuery& query) {
  switch (query.kind) {
    case PropertyQuery::Kind::EF: return check_ef(inst, alloc);
    case PropertyQuery::Kind::EF1: return check_ef1(inst, alloc);
    case PropertyQuery::Kind::EFX: return check_efx(inst, alloc);
    case PropertyQuery::Kind::EFX3: return check_efx3(inst, alloc);
    case PropertyQuery::Kind::XYZ:
      return check_xyz(inst, alloc, query.x, query.y, query.z);
  }
  throw std::invalid_argument("unknown property");
}

}  // namespace fairdiv
