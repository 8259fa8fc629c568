// Command-line front end: run the solvers, the fairness/efficiency checkers
// and the exhaustive oracle on JSON instance files.
//
// Exit codes: 0 success (and, for `check`, all properties hold); 1 usage or
// parse error; 2 utility-class precondition violation; 3 enumeration cap
// exceeded; 4 a checked property fails or a regression assertion mismatches.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairdiv/algorithms.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/matching.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/welfare.hpp"
#include "paper_examples.hpp"

namespace {

using nlohmann::json;
using namespace fairdiv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitCap = 3;
constexpr int kExitPropertyFailed = 4;

struct CommonArgs {
  std::string format = "text";

  bool json_output() const { return format == "json"; }
};

void add_format_flag(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

std::string show_agents(const AgentSet& agents) {
  std::string out = "{";
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(agents[i] + 1);
  }
  return out + "}";
}

std::string show_bundles(const Allocation& alloc) {
  std::string out = "[";
  for (std::size_t a = 0; a < alloc.bundles.size(); ++a) {
    if (a) out += ",";
    out += "[";
    for (std::size_t i = 0; i < alloc.bundles[a].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(alloc.bundles[a][i] + 1);
    }
    out += "]";
  }
  return out + "]";
}

json agents_to_json(const AgentSet& agents) {
  json arr = json::array();
  for (int a : agents) arr.push_back(a + 1);
  return arr;
}

json witness_to_json(const FairnessWitness& witness) {
  json entry = {{"envier", witness.envier + 1},
                {"envied", witness.envied + 1},
                {"layer", witness.layer},
                {"code", witness.code}};
  if (witness.item) entry["item"] = *witness.item + 1;
  return entry;
}

std::string describe_witness(const FairnessWitness& w) {
  const std::string pair = "agent " + std::to_string(w.envier + 1) +
                           " envies agent " + std::to_string(w.envied + 1);
  const std::string layer = " [" + w.layer + "]";
  if (w.code == "envy") return pair + layer;
  if (w.code == "envy-unremovable") {
    return pair + ": no single-item removal eliminates the envy" + layer;
  }
  if (w.code == "own-bad") {
    return pair + " even after dropping own bad item " +
           std::to_string(*w.item + 1) + layer;
  }
  if (w.code == "other-good") {
    return pair + " even after ignoring good item " +
           std::to_string(*w.item + 1) + layer;
  }
  return pair + " (" + w.code + ")" + layer;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  CommonArgs common;
  std::string instance_path;
  std::string algorithm;
  std::string output_path;
  bool with_trace = false;
};

int run_solve(const SolveArgs& args) {
  const auto file = load_instance(args.instance_path);
  const Instance& inst = file.instance;
  SolveResult result;
  if (args.algorithm == "nash-max-tertiary") {
    result = nash_max_tertiary(inst);
  } else if (args.algorithm == "nash-max-min-tertiary") {
    result = nash_max_min_tertiary(inst);
  } else {
    result = max_min_identical(inst);
  }

  json doc = allocation_to_json(result.allocation, inst.m);
  if (args.with_trace) doc["trace"] = trace_to_json(result.trace);
  if (!args.output_path.empty()) {
    write_json_file(args.output_path, doc);
  }
  if (args.common.json_output()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "algorithm: " << args.algorithm << "\n";
    std::cout << "bundles: " << show_bundles(result.allocation) << "\n";
    const auto profile = utility_profile(inst, result.allocation);
    std::cout << "utilities:";
    for (long long v : profile) std::cout << " " << v;
    std::cout << "\n";
    if (!result.positive_set.empty()) {
      std::cout << "positive set N: " << show_agents(result.positive_set)
                << "\n";
    }
    if (!result.bad_receivers.empty()) {
      std::cout << "bad receivers M: " << show_agents(result.bad_receivers)
                << "\n";
    }
    if (args.with_trace) {
      for (const auto& event : result.trace.events) {
        std::cout << "  " << phase_name(event.phase) << ": item "
                  << event.item + 1 << " -> agent " << event.agent + 1 << "\n";
      }
    }
    if (!args.output_path.empty()) {
      std::cout << "written to " << args.output_path << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  CommonArgs common;
  std::string instance_path;
  std::string allocation_path;
  std::vector<std::string> props;
  long long cap = kDefaultEnumerationCap;
};

int run_check(const CheckArgs& args) {
  const auto file = load_instance(args.instance_path);
  const Instance& inst = file.instance;
  const auto alloc = load_allocation(args.allocation_path, inst);

  // Validate names before running anything.
  for (const auto& prop : args.props) {
    if (prop != "po-identical" && prop != "po-tertiary" &&
        prop != "po-exhaustive" && !parse_property(prop)) {
      std::cerr << "unknown property: " << prop << "\n";
      return kExitUsage;
    }
  }

  bool all_hold = true;
  json results = json::array();
  for (const auto& prop : args.props) {
    if (prop.rfind("po-", 0) == 0) {
      const PoStrategy strategy = prop == "po-identical"
                                      ? PoStrategy::IdenticalFast
                                  : prop == "po-tertiary"
                                      ? PoStrategy::TertiaryFast
                                      : PoStrategy::Exhaustive;
      const bool holds = check_po(inst, alloc, strategy, args.cap);
      all_hold = all_hold && holds;
      if (args.common.json_output()) {
        results.push_back({{"property", prop}, {"holds", holds}});
      } else {
        std::cout << prop << ": " << (holds ? "holds" : "FAILS") << "\n";
        if (!holds && strategy == PoStrategy::Exhaustive) {
          const auto pareto = pareto_optimal_exhaustive(inst, alloc, args.cap);
          if (pareto.dominator) {
            std::cout << "  dominated by " << show_bundles(*pareto.dominator)
                      << "\n";
          }
        }
      }
    } else {
      const auto report = check_property(inst, alloc, *parse_property(prop));
      all_hold = all_hold && report.holds;
      if (args.common.json_output()) {
        json witnesses = json::array();
        for (const auto& w : report.witnesses) {
          witnesses.push_back(witness_to_json(w));
        }
        results.push_back({{"property", report.property},
                           {"holds", report.holds},
                           {"witnesses", std::move(witnesses)}});
      } else {
        std::cout << report.property << ": "
                  << (report.holds ? "holds" : "FAILS") << "\n";
        for (const auto& w : report.witnesses) {
          std::cout << "  " << describe_witness(w) << "\n";
        }
      }
    }
  }
  if (args.common.json_output()) {
    std::cout << json{{"results", results}, {"all_hold", all_hold}}.dump(2)
              << "\n";
  }
  return all_hold ? kExitOk : kExitPropertyFailed;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  CommonArgs common;
  std::string instance_path;
  std::string allocation_path;  // po only
  std::vector<int> agents;      // 1-based; empty means all
  std::vector<int> items;       // 1-based; empty means use item_class
  std::string item_class = "all";
  std::string welfare = "nw";
  std::string property = "efx";
  bool require_nonempty = false;
  long long cap = kDefaultEnumerationCap;
};

AgentSet resolve_agents(const Instance& inst, const std::vector<int>& raw) {
  AgentSet agents;
  if (raw.empty()) {
    agents.resize(inst.n);
    for (int a = 0; a < inst.n; ++a) agents[a] = a;
    return agents;
  }
  for (int a : raw) {
    if (a < 1 || a > inst.n) {
      throw parse_error("agent id " + std::to_string(a) +
                        " out of range [1," + std::to_string(inst.n) + "]");
    }
    agents.push_back(a - 1);
  }
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  return agents;
}

std::vector<int> resolve_items(const Instance& inst,
                               const std::vector<int>& raw,
                               const std::string& item_class) {
  std::vector<int> items;
  if (!raw.empty()) {
    for (int o : raw) {
      if (o < 1 || o > inst.m) {
        throw parse_error("item id " + std::to_string(o) +
                          " out of range [1," + std::to_string(inst.m) + "]");
      }
      items.push_back(o - 1);
    }
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
  }
  const auto part = partition_items(inst);
  if (item_class == "mixed-goods") return part.mixed_goods;
  if (item_class == "pure-bads") return part.pure_bads;
  if (item_class == "dummy-bads") return part.dummy_bads;
  items.resize(inst.m);
  for (int o = 0; o < inst.m; ++o) items[o] = o;
  return items;
}

int run_oracle_opt(const OracleArgs& args, bool maximize) {
  const auto file = load_instance(args.instance_path);
  const Instance& inst = file.instance;
  const auto agents = resolve_agents(inst, args.agents);
  const auto items = resolve_items(inst, args.items, args.item_class);
  const auto kind = *parse_welfare(args.welfare);
  const auto result =
      maximize ? max_welfare(inst, agents, items, kind, args.cap)
               : min_welfare(inst, agents, items, kind, args.require_nonempty,
                             args.cap);
  if (args.common.json_output()) {
    json optimizers = json::array();
    for (const auto& alloc : result.optimizers) {
      optimizers.push_back(allocation_to_json(alloc, inst.m));
    }
    std::cout << json{{"objective", welfare_name(result.objective)},
                      {"maximize", result.maximize},
                      {"agents", agents_to_json(result.agents)},
                      {"optimum", result.optimum.str()},
                      {"optimizer_count", result.optimizer_count.str()},
                      {"optimizers", std::move(optimizers)},
                      {"allocations", result.total_allocations.str()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (maximize ? "max " : "min ") << welfare_name(kind) << " over "
              << show_agents(agents) << ": " << result.optimum << "\n";
    std::cout << "optimizers (" << result.optimizers.size() << " of "
              << result.optimizer_count << "):\n";
    for (const auto& alloc : result.optimizers) {
      std::cout << "  " << show_bundles(alloc) << "\n";
    }
    std::cout << result.total_allocations << " allocations scanned\n";
  }
  return kExitOk;
}

int run_oracle_po(const OracleArgs& args) {
  const auto file = load_instance(args.instance_path);
  const Instance& inst = file.instance;
  const auto alloc = load_allocation(args.allocation_path, inst);
  const auto result = pareto_optimal_exhaustive(inst, alloc, args.cap);
  if (args.common.json_output()) {
    json doc = {{"pareto_optimal", result.pareto_optimal}};
    if (result.dominator) {
      doc["dominator"] = allocation_to_json(*result.dominator, inst.m);
    }
    std::cout << doc.dump(2) << "\n";
  } else if (result.pareto_optimal) {
    std::cout << "pareto-optimal\n";
  } else {
    std::cout << "not pareto-optimal, dominated by "
              << show_bundles(*result.dominator) << "\n";
  }
  return kExitOk;
}

int run_oracle_find(const OracleArgs& args) {
  const auto file = load_instance(args.instance_path);
  const Instance& inst = file.instance;
  const auto agents = resolve_agents(inst, args.agents);
  const auto items = resolve_items(inst, args.items, args.item_class);
  const auto query = *parse_property(args.property);
  const auto found = find_fair(inst, query, agents, items, args.cap);
  const ExactValue total =
      items.empty() ? ExactValue(1)
                    : boost::multiprecision::pow(
                          ExactValue(static_cast<long long>(agents.size())),
                          static_cast<unsigned>(items.size()));
  if (args.common.json_output()) {
    json doc = {{"property", property_name(query)},
                {"found", found.has_value()},
                {"allocations", total.str()}};
    if (found) doc["allocation"] = allocation_to_json(*found, inst.m);
    std::cout << doc.dump(2) << "\n";
  } else if (found) {
    std::cout << property_name(query) << ": " << show_bundles(*found) << "\n";
  } else {
    std::cout << "none exists (" << total << " allocations scanned)\n";
  }
  return kExitOk;
}

int run_oracle_leximin(const OracleArgs& args) {
  const auto file = load_instance(args.instance_path);
  const Instance& inst = file.instance;
  const auto agents = resolve_agents(inst, args.agents);
  const auto items = resolve_items(inst, args.items, args.item_class);
  const auto alloc = leximin(inst, agents, items, args.cap);
  if (args.common.json_output()) {
    std::cout << allocation_to_json(alloc, inst.m).dump(2) << "\n";
  } else {
    std::cout << "leximin: " << show_bundles(alloc) << "\n";
    const auto profile = utility_profile(inst, alloc);
    std::cout << "utilities:";
    for (int a : agents) std::cout << " " << profile[a];
    std::cout << "\n";
  }
  return kExitOk;
}

int run_oracle_ratio(const OracleArgs& args) {
  const auto file = load_instance(args.instance_path);
  const Instance& inst = file.instance;
  const auto agents = resolve_agents(inst, args.agents);
  const auto items = resolve_items(inst, args.items, args.item_class);
  const auto query = *parse_property(args.property);
  const auto kind = *parse_welfare(args.welfare);
  const auto ratio = worst_case_ratio(inst, query, kind, agents, items,
                                      args.cap);
  if (args.common.json_output()) {
    json doc = {{"property", property_name(query)},
                {"welfare", welfare_name(kind)},
                {"fair_exists", ratio.fair_exists},
                {"optimum", ratio.optimum.str()},
                {"agents", ratio.agent_count}};
    if (ratio.fair_exists) {
      doc["fair_minimum"] = ratio.fair_minimum.str();
      doc["fair_count"] = ratio.fair_count.str();
    }
    std::cout << doc.dump(2) << "\n";
  } else if (!ratio.fair_exists) {
    std::cout << "no allocation satisfies " << property_name(query) << "\n";
    std::cout << "optimum " << welfare_name(kind) << ": " << ratio.optimum
              << "\n";
  } else {
    std::cout << "worst " << welfare_name(kind) << " among "
              << property_name(query) << " allocations: " << ratio.fair_minimum
              << "\n";
    std::cout << "optimum: " << ratio.optimum << "\n";
    std::cout << "agents (root degree): " << ratio.agent_count << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fair division of indivisible mixed manna: greedy solvers, "
      "fairness/efficiency checkers and an exhaustive oracle"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand(
      "solve", "Run an allocation algorithm on an instance file");
  solve->add_option("instance", solve_args.instance_path, "Instance JSON file")
      ->required();
  solve
      ->add_option("-a,--algorithm", solve_args.algorithm,
                   "Algorithm to run")
      ->required()
      ->check(CLI::IsMember(
          {"nash-max-tertiary", "nash-max-min-tertiary", "max-min-identical"}));
  solve->add_option("-o,--output", solve_args.output_path,
                    "Write the allocation JSON here");
  solve->add_flag("--trace", solve_args.with_trace,
                  "Include the assignment trace");
  add_format_flag(solve, solve_args.common);

  CheckArgs check_args;
  auto* check = app.add_subcommand(
      "check", "Check fairness/efficiency properties of an allocation");
  check->add_option("instance", check_args.instance_path, "Instance JSON file")
      ->required();
  check
      ->add_option("allocation", check_args.allocation_path,
                   "Allocation JSON file")
      ->required();
  check
      ->add_option("--props", check_args.props,
                   "Properties: ef, ef1, efx, efx3, xyz:<x>:<y>:<z>, "
                   "po-identical, po-tertiary, po-exhaustive")
      ->required()
      ->delimiter(',');
  check->add_option("--cap", check_args.cap, "Enumeration cap")
      ->capture_default_str();
  add_format_flag(check, check_args.common);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive enumeration: optima, Pareto checks, searches");
  oracle->require_subcommand(1);
  auto add_oracle_common = [&](CLI::App* sub) {
    sub->add_option("instance", oracle_args.instance_path,
                    "Instance JSON file")
        ->required();
    sub->add_option("--agents", oracle_args.agents,
                    "Receiving agents (1-based; default all)")
        ->delimiter(',');
    sub->add_option("--items", oracle_args.items,
                    "Item ids (1-based; default per --item-class)")
        ->delimiter(',');
    sub->add_option("--item-class", oracle_args.item_class,
                    "Item set when --items is absent")
        ->check(
            CLI::IsMember({"all", "mixed-goods", "pure-bads", "dummy-bads"}))
        ->capture_default_str();
    sub->add_option("--cap", oracle_args.cap, "Enumeration cap")
        ->capture_default_str();
    add_format_flag(sub, oracle_args.common);
  };

  auto* oracle_max =
      oracle->add_subcommand("max", "Maximize a welfare objective");
  add_oracle_common(oracle_max);
  oracle_max->add_option("--welfare", oracle_args.welfare, "nw, dnw or ew")
      ->required()
      ->check(CLI::IsMember({"nw", "dnw", "ew"}));

  auto* oracle_min =
      oracle->add_subcommand("min", "Minimize a welfare objective");
  add_oracle_common(oracle_min);
  oracle_min->add_option("--welfare", oracle_args.welfare, "nw, dnw or ew")
      ->required()
      ->check(CLI::IsMember({"nw", "dnw", "ew"}));
  oracle_min->add_flag("--require-nonempty", oracle_args.require_nonempty,
                       "Only consider allocations giving every receiver an "
                       "item");

  auto* oracle_po = oracle->add_subcommand(
      "po", "Decide Pareto optimality of an allocation exhaustively");
  oracle_po->add_option("instance", oracle_args.instance_path,
                        "Instance JSON file")
      ->required();
  oracle_po
      ->add_option("allocation", oracle_args.allocation_path,
                   "Allocation JSON file")
      ->required();
  oracle_po->add_option("--cap", oracle_args.cap, "Enumeration cap")
      ->capture_default_str();
  add_format_flag(oracle_po, oracle_args.common);

  auto* oracle_find = oracle->add_subcommand(
      "find", "Search for an allocation satisfying a property");
  add_oracle_common(oracle_find);
  oracle_find
      ->add_option("--property", oracle_args.property,
                   "ef, ef1, efx, efx3 or xyz:<x>:<y>:<z>")
      ->required();

  auto* oracle_leximin =
      oracle->add_subcommand("leximin", "Compute the leximin allocation");
  add_oracle_common(oracle_leximin);

  auto* oracle_ratio = oracle->add_subcommand(
      "ratio", "Worst welfare among property-satisfying allocations vs the "
               "optimum");
  add_oracle_common(oracle_ratio);
  oracle_ratio
      ->add_option("--property", oracle_args.property,
                   "ef, ef1, efx, efx3 or xyz:<x>:<y>:<z>")
      ->required();
  oracle_ratio->add_option("--welfare", oracle_args.welfare, "nw, dnw or ew")
      ->required()
      ->check(CLI::IsMember({"nw", "dnw", "ew"}));

  cli::PaperExamplesOptions examples_options;
  CommonArgs examples_common;
  auto* examples = app.add_subcommand(
      "paper-examples", "Replay the bundled regression fixtures");
  examples->add_option("--fixtures", examples_options.fixtures_dir,
                       "Fixture directory")
      ->capture_default_str();
  examples->add_option("--seed", examples_options.seed,
                       "Seed for the randomized spot-check")
      ->capture_default_str();
  add_format_flag(examples, examples_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(solve_args);
    if (app.got_subcommand(check)) return run_check(check_args);
    if (app.got_subcommand(oracle)) {
      if (oracle->got_subcommand(oracle_max)) {
        return run_oracle_opt(oracle_args, /*maximize=*/true);
      }
      if (oracle->got_subcommand(oracle_min)) {
        return run_oracle_opt(oracle_args, /*maximize=*/false);
      }
      if (oracle->got_subcommand(oracle_po)) return run_oracle_po(oracle_args);
      if (oracle->got_subcommand(oracle_find)) {
        if (!parse_property(oracle_args.property)) {
          std::cerr << "unknown property: " << oracle_args.property << "\n";
          return kExitUsage;
        }
        return run_oracle_find(oracle_args);
      }
      if (oracle->got_subcommand(oracle_leximin)) {
        return run_oracle_leximin(oracle_args);
      }
      if (oracle->got_subcommand(oracle_ratio)) {
        if (!parse_property(oracle_args.property)) {
          std::cerr << "unknown property: " << oracle_args.property << "\n";
          return kExitUsage;
        }
        return run_oracle_ratio(oracle_args);
      }
    }
    if (app.got_subcommand(examples)) {
      examples_options.json = examples_common.json_output();
      return cli::run_paper_examples(examples_options);
    }
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
