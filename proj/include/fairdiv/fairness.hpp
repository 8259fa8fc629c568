#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/model.hpp"

// Envy-freeness checkers and Pareto-optimality fast paths for mixed manna.
//
// Every checker returns a full report: the verdict plus one witness per
// violated ordered pair (or per violating item, for the up-to-any-item
// conditions). A report holds iff it has no witnesses, and every witness can
// be replayed as a concrete bundle-utility inequality.

namespace fairdiv {

enum class Fairness { EF, EF1, EFX };

std::string fairness_name(Fairness f);

struct FairnessWitness {
  int envier = 0;
  int envied = 0;
  std::optional<int> item;  // the offending item, when one is pinned
  // "full" for the whole scope, "goods"/"bads" for the layered checks.
  std::string layer;
  // "envy": u_a(A_a) < u_a(A_b).
  // "envy-unremovable": envy that no single-item deletion removes.
  // "own-bad": removing the held bad `item` still leaves envy.
  // "other-good": removing the envied good `item` still leaves envy.
  std::string code;
};

struct FairnessReport {
  std::string property;
  bool holds = true;
  std::vector<FairnessWitness> witnesses;
};

// u_a(A_a) >= u_a(A_b) for every ordered pair (a, b).
FairnessReport check_ef(const Instance& inst, const Allocation& alloc);

// Envy-free up to some item: for every envious pair there is a single item in
// A_a or A_b whose deletion (from its own side of the comparison) removes the
// envy. Deleting from the envier's own bundle is allowed; with bads present
// that case matters.
FairnessReport check_ef1(const Instance& inst, const Allocation& alloc);

// Envy-free up to any item: for every pair (a, b), removing any bad from A_a
// keeps a at least as happy as with A_b, and removing any good (from a's
// point of view) from A_b keeps a at least as happy as with the remainder.
FairnessReport check_efx(const Instance& inst, const Allocation& alloc);

// EFX on the full scope, on the mixed-goods restriction and on the pure-bads
// restriction simultaneously. Witnesses carry the failing layer. Utilities
// are always read from the full matrix; only bundle membership is restricted.
FairnessReport check_efx3(const Instance& inst, const Allocation& alloc);

// Generic layered fairness: X on the full scope, Y on the mixed-goods
// restriction, Z on the pure-bads restriction. (EFX, EFX, EFX) coincides with
// check_efx3.
FairnessReport check_xyz(const Instance& inst, const Allocation& alloc,
                         Fairness x, Fairness y, Fairness z);

enum class PoStrategy { IdenticalFast, TertiaryFast, Exhaustive };

// Pareto optimality.
//   IdenticalFast: identical utilities only; every complete allocation has
//     the same utilitarian sum, so the answer is always true.
//   TertiaryFast: tertiary utilities only; true iff the utilitarian sum hits
//     its ceiling (every mixed good with an agent valuing it +alpha, every
//     dummy bad with a zero-valuing agent). For tertiary instances this sum
//     test decides PO exactly: any short-of-ceiling allocation admits a
//     single-item move that is a strict Pareto improvement.
//   Exhaustive: ground truth by dominance scan over all allocations of the
//     same scope (see oracle).
bool check_po(const Instance& inst, const Allocation& alloc,
              PoStrategy strategy, long long cap = kDefaultEnumerationCap);

// Name-based property dispatch shared by the oracle and the CLI:
// "ef" | "ef1" | "efx" | "efx3" | "xyz:<x>:<y>:<z>".
struct PropertyQuery {
  enum class Kind { EF, EF1, EFX, EFX3, XYZ };
  Kind kind = Kind::EF;
  Fairness x = Fairness::EF;
  Fairness y = Fairness::EF;
  Fairness z = Fairness::EF;
};

std::optional<PropertyQuery> parse_property(const std::string& name);
std::string property_name(const PropertyQuery& query);

FairnessReport check_property(const Instance& inst, const Allocation& alloc,
                              const PropertyQuery& query);

}  // namespace fairdiv
