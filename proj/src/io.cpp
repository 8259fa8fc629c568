#include "fairdiv/io.hpp"

#include <algorithm>
#include <fstream>

namespace fairdiv {

namespace {

using nlohmann::json;

long long integer_at(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw parse_error(where + ": expected an integer, got " +
                      std::string(value.type_name()));
  }
  return value.get<long long>();
}

std::vector<std::string> names_at(const json& doc, const std::string& key,
                                  std::size_t expected,
                                  const std::string& context) {
  if (!doc.contains(key)) return {};
  const json& arr = doc.at(key);
  if (!arr.is_array()) {
    throw parse_error(context + ": " + key + " must be an array of strings");
  }
  std::vector<std::string> names;
  for (const auto& entry : arr) {
    if (!entry.is_string()) {
      throw parse_error(context + ": " + key + " must contain only strings");
    }
    names.push_back(entry.get<std::string>());
  }
  if (names.size() != expected) {
    throw parse_error(context + ": " + key + " has " +
                      std::to_string(names.size()) + " entries, expected " +
                      std::to_string(expected));
  }
  return names;
}

}  // namespace

InstanceFile parse_instance_json(const json& doc, const std::string& context) {
  if (!doc.is_object()) {
    throw parse_error(context + ": instance file must be a JSON object");
  }
  for (const char* key : {"agents", "items", "utilities"}) {
    if (!doc.contains(key)) {
      throw parse_error(context + ": missing required field \"" +
                        std::string(key) + "\"");
    }
  }
  const long long agents = integer_at(doc.at("agents"), context + ": agents");
  const long long items = integer_at(doc.at("items"), context + ": items");
  if (agents < 1) {
    throw parse_error(context + ": agents must be at least 1");
  }
  if (items < 0) {
    throw parse_error(context + ": items must be non-negative");
  }
  const json& rows = doc.at("utilities");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(agents)) {
    throw parse_error(context + ": utilities must be an array of " +
                      std::to_string(agents) + " rows");
  }
  std::vector<std::vector<long long>> matrix;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const json& row = rows[a];
    const std::string row_name =
        context + ": utilities[" + std::to_string(a + 1) + "]";
    if (!row.is_array()) {
      throw parse_error(row_name + ": expected an array");
    }
    if (row.size() != static_cast<std::size_t>(items)) {
      throw parse_error(row_name + " has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(items));
    }
    std::vector<long long> values;
    for (std::size_t o = 0; o < row.size(); ++o) {
      values.push_back(integer_at(
          row[o], row_name + "[" + std::to_string(o + 1) + "]"));
    }
    matrix.push_back(std::move(values));
  }
  InstanceFile file{Instance(std::move(matrix)),
                    names_at(doc, "agent_names",
                             static_cast<std::size_t>(agents), context),
                    names_at(doc, "item_names",
                             static_cast<std::size_t>(items), context)};
  return file;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << doc.dump(2) << "\n";
}

InstanceFile load_instance(const std::string& path) {
  try {
    return parse_instance_json(read_json_file(path), path);
  } catch (const std::invalid_argument& e) {
    throw parse_error(path + ": " + e.what());
  }
}

json instance_to_json(const InstanceFile& file) {
  json doc;
  doc["agents"] = file.instance.n;
  doc["items"] = file.instance.m;
  doc["utilities"] = file.instance.u;
  if (!file.agent_names.empty()) doc["agent_names"] = file.agent_names;
  if (!file.item_names.empty()) doc["item_names"] = file.item_names;
  return doc;
}

Allocation parse_allocation_json(const json& doc, const Instance& inst,
                                 const std::string& context) {
  if (!doc.is_object() || !doc.contains("bundles")) {
    throw parse_error(context +
                      ": allocation file must be an object with \"bundles\"");
  }
  const json& rows = doc.at("bundles");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(inst.n)) {
    throw parse_error(context + ": bundles must be an array of " +
                      std::to_string(inst.n) + " lists");
  }
  Allocation alloc = empty_allocation(inst.n);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const std::string row_name =
        context + ": bundles[" + std::to_string(a + 1) + "]";
    if (!rows[a].is_array()) {
      throw parse_error(row_name + ": expected an array of item ids");
    }
    for (const auto& entry : rows[a]) {
      const long long id = integer_at(entry, row_name);
      if (id < 1 || id > inst.m) {
        throw parse_error(row_name + ": item id " + std::to_string(id) +
                          " out of range [1," + std::to_string(inst.m) + "]");
      }
      alloc.bundles[a].push_back(static_cast<int>(id) - 1);
    }
    std::sort(alloc.bundles[a].begin(), alloc.bundles[a].end());
  }
  if (doc.contains("scope") && doc.at("scope").is_array()) {
    for (const auto& entry : doc.at("scope")) {
      const long long id = integer_at(entry, context + ": scope");
      if (id < 1 || id > inst.m) {
        throw parse_error(context + ": scope item id " + std::to_string(id) +
                          " out of range [1," + std::to_string(inst.m) + "]");
      }
      alloc.scope.push_back(static_cast<int>(id) - 1);
    }
    std::sort(alloc.scope.begin(), alloc.scope.end());
    alloc.scope.erase(std::unique(alloc.scope.begin(), alloc.scope.end()),
                      alloc.scope.end());
  } else {
    // "all" or absent: the allocation covers every item.
    alloc.scope.resize(inst.m);
    for (int o = 0; o < inst.m; ++o) alloc.scope[o] = o;
  }
  const auto issues = validate_allocation(inst, alloc);
  if (!issues.empty()) {
    throw parse_error(context + ": " + issues.front());
  }
  return alloc;
}

Allocation load_allocation(const std::string& path, const Instance& inst) {
  return parse_allocation_json(read_json_file(path), inst, path);
}

json allocation_to_json(const Allocation& alloc, int m) {
  json doc;
  json bundles = json::array();
  for (const auto& bundle : alloc.bundles) {
    json row = json::array();
    for (int o : bundle) row.push_back(o + 1);
    bundles.push_back(std::move(row));
  }
  doc["bundles"] = std::move(bundles);
  if (static_cast<int>(alloc.scope.size()) == m) {
    doc["scope"] = "all";
  } else {
    json scope = json::array();
    for (int o : alloc.scope) scope.push_back(o + 1);
    doc["scope"] = std::move(scope);
  }
  return doc;
}

json trace_to_json(const AlgorithmTrace& trace) {
  json events = json::array();
  for (const auto& event : trace.events) {
    events.push_back({{"item", event.item + 1},
                      {"agent", event.agent + 1},
                      {"phase", phase_name(event.phase)},
                      {"utilities", event.utilities}});
  }
  return {{"events", std::move(events)}};
}

}  // namespace fairdiv
