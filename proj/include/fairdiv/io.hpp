#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fairdiv/algorithms.hpp"
#include "fairdiv/model.hpp"

// JSON file formats. Instances: {"agents": n, "items": m, "utilities":
// [[int, ...], ...]} with optional "agent_names"/"item_names". Allocations:
// {"bundles": [[item ids...], ...], "scope": "all" | [item ids...]}. All ids
// are 1-based on disk and 0-based in memory.

namespace fairdiv {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceFile {
  Instance instance;
  std::vector<std::string> agent_names;  // empty when absent
  std::vector<std::string> item_names;
};

InstanceFile parse_instance_json(const nlohmann::json& doc,
                                 const std::string& context);
InstanceFile load_instance(const std::string& path);
nlohmann::json instance_to_json(const InstanceFile& file);

Allocation parse_allocation_json(const nlohmann::json& doc,
                                 const Instance& inst,
                                 const std::string& context);
Allocation load_allocation(const std::string& path, const Instance& inst);
nlohmann::json allocation_to_json(const Allocation& alloc, int m);

nlohmann::json trace_to_json(const AlgorithmTrace& trace);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace fairdiv
