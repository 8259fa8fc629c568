#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

// Core problem types: utility instances, item classification, allocations and
// exact arithmetic. Everything else (checkers, welfare, matching, algorithms,
// enumeration) builds on these. All types are immutable value types and all
// operations are pure functions, so they are safe to share across threads.

namespace fairdiv {

// Arbitrary-precision signed integer. Welfare products of integer utilities
// can exceed any machine word, so optima and ratio comparisons are computed
// exactly; no floating point anywhere in the core.
using ExactValue = boost::multiprecision::cpp_int;

// Sorted list of distinct agent indices (0-based internally; file formats and
// reports are 1-based).
using AgentSet = std::vector<int>;

// Default ceiling on exhaustive enumeration, see oracle.hpp.
inline constexpr long long kDefaultEnumerationCap = 2'000'000;

// Thrown when an operation is invoked outside its utility-class precondition,
// e.g. a tertiary-only algorithm on a general instance.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// n agents, m items, exact integer utilities u[agent][item].
struct Instance {
  int n = 0;
  int m = 0;
  std::vector<std::vector<long long>> u;

  // Throws std::invalid_argument on an empty or ragged matrix, or when an
  // agent's total absolute utility does not fit in 64 bits (every bundle sum
  // must stay exactly representable in a signed 64-bit value).
  explicit Instance(std::vector<std::vector<long long>> utilities);

  // Range-checked access; throws std::out_of_range.
  long long utility(int agent, int item) const;
};

enum class ItemKind { MixedGood, PureBad, DummyBad };

struct ItemClass {
  ItemKind kind = ItemKind::MixedGood;
  bool is_good = false;       // mixed good valued non-negatively by everyone
  bool is_pure_good = false;  // mixed good valued positively by everyone
};

// One class per item. MixedGood iff some agent values the item positively,
// PureBad iff all agents value it negatively, DummyBad otherwise (all
// non-positive with at least one exact zero). The three kinds partition the
// item set.
std::vector<ItemClass> classify_items(const Instance& inst);

// Item indices grouped by kind, each list ascending.
struct ItemPartition {
  std::vector<int> mixed_goods;
  std::vector<int> pure_bads;
  std::vector<int> dummy_bads;
};
ItemPartition partition_items(const Instance& inst);

// Bundles per agent plus the item set they cover. A well-formed allocation
// has pairwise-disjoint bundles whose union is exactly the scope. Partial
// allocations built up by the algorithms keep scope equal to the union of
// what has been assigned so far.
struct Allocation {
  std::vector<std::vector<int>> bundles;  // one per agent, each sorted ascending
  std::vector<int> scope;                 // sorted ascending

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Allocation with n empty bundles and empty scope.
Allocation empty_allocation(int n);

// Normalizes the bundles (sorts them) and sets scope to their union.
Allocation make_allocation(int n, std::vector<std::vector<int>> bundles);

// Restriction of an allocation to an item subset: bundle membership is
// intersected with `items`, scope likewise. `items` must be sorted.
Allocation restrict_to(const Allocation& alloc, const std::vector<int>& items);

// Returns human-readable descriptions of every invariant violation (empty
// means the allocation is valid for the instance). Reported indices are
// 1-based.
std::vector<std::string> validate_allocation(const Instance& inst,
                                             const Allocation& alloc);

// Throws std::invalid_argument with the first violation, if any.
void require_valid(const Instance& inst, const Allocation& alloc);

// Sum of u[agent][o] over o in items; empty set gives 0.
ExactValue bundle_utility(const Instance& inst, int agent,
                          const std::vector<int>& items);

// Same sum as a 64-bit value. Exact because the Instance constructor bounds
// every agent's total absolute utility.
long long bundle_utility_i64(const Instance& inst, int agent,
                             const std::vector<int>& items);

// u_a(A_a) for every agent a.
std::vector<long long> utility_profile(const Instance& inst,
                                       const Allocation& alloc);

struct UtilityClass {
  enum class Kind { General, Identical, Tertiary, IdenticalTertiary };

  Kind kind = Kind::General;
  // Positive for (Identical)Tertiary: the common magnitude of all nonzero
  // utilities; 1 by convention when the matrix is empty or all-zero.
  long long alpha = 0;

  bool is_identical() const {
    return kind == Kind::Identical || kind == Kind::IdenticalTertiary;
  }
  bool is_tertiary() const {
    return kind == Kind::Tertiary || kind == Kind::IdenticalTertiary;
  }
};

// Most specific class the matrix satisfies: IdenticalTertiary when all rows
// are equal and every value lies in {-alpha, 0, alpha}.
UtilityClass detect_utility_class(const Instance& inst);

// "general", "identical", "tertiary" or "identical-tertiary"; used in
// diagnostics and precondition messages.
std::string utility_class_name(const UtilityClass& cls);

}  // namespace fairdiv
