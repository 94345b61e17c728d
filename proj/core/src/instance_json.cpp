#include <fstream>
#include <sstream>

#include <json.hpp>

#include "matsec/graphic_matroid.hpp"
#include "matsec/instance.hpp"
#include "matsec/laminar_matroid.hpp"

namespace matsec {

namespace {

using nlohmann::json;

// A laminar entry is {"capacity": b, "members": [...]} and/or
// {"capacity": b, "children": [entries]}. Every entry contributes one set;
// an entry with children covers everything its children cover.
std::vector<ElementId> flatten_laminar_entry(const json& entry, std::vector<LaminarSet>& out) {
  LaminarSet set;
  if (!entry.contains("capacity")) {
    throw ValidationError(ValidationIssue::kInvalidParams, "laminar set without capacity");
  }
  set.capacity = entry.at("capacity").get<int>();
  if (entry.contains("members")) {
    set.members = entry.at("members").get<std::vector<ElementId>>();
  }
  if (entry.contains("children")) {
    for (const json& child : entry.at("children")) {
      std::vector<ElementId> below = flatten_laminar_entry(child, out);
      set.members.insert(set.members.end(), below.begin(), below.end());
    }
  }
  out.push_back(set);
  return set.members;
}

RawInstance raw_from_json(const json& doc) {
  RawInstance raw;
  raw.n = doc.at("n").get<int>();
  raw.weights = doc.at("weights").get<std::vector<double>>();
  raw.name = doc.value("name", std::string{});

  const json& matroid = doc.at("matroid");
  raw.matroid_type = matroid.at("type").get<std::string>();
  if (raw.matroid_type == "uniform") {
    raw.uniform_rank = matroid.at("rank").get<int>();
  } else if (raw.matroid_type == "partition") {
    for (const json& part : matroid.at("parts")) {
      LaminarSet p;
      p.members = part.at("members").get<std::vector<ElementId>>();
      p.capacity = part.at("capacity").get<int>();
      raw.parts.push_back(std::move(p));
    }
  } else if (raw.matroid_type == "graphic") {
    raw.num_vertices = matroid.value("vertices", -1);
    for (const json& edge : matroid.at("edges")) {
      raw.edges.emplace_back(edge.at(0).get<int>(), edge.at(1).get<int>());
    }
  } else if (raw.matroid_type == "laminar") {
    for (const json& entry : matroid.at("sets")) {
      flatten_laminar_entry(entry, raw.laminar_sets);
    }
  }
  return raw;
}

}  // namespace

RawInstance parse_raw_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
    return raw_from_json(doc);
  } catch (const json::exception& e) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          std::string("malformed instance JSON: ") + e.what());
  }
}

Instance parse_instance(const std::string& json_text) {
  return validate_instance(parse_raw_instance(json_text));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(ValidationIssue::kInvalidParams, "cannot open instance file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Instance instance = parse_instance(buffer.str());
  if (instance.name().empty()) instance.set_name(path);
  return instance;
}

std::string instance_to_json(const Instance& instance) {
  json doc;
  doc["n"] = instance.n();
  doc["weights"] = instance.weights();
  if (!instance.name().empty()) doc["name"] = instance.name();

  json matroid;
  const Matroid& m = instance.matroid();
  matroid["type"] = m.type_name();
  if (const auto* uniform = dynamic_cast<const UniformMatroid*>(&m)) {
    matroid["rank"] = uniform->rank_bound();
  } else if (const auto* partition = dynamic_cast<const PartitionMatroid*>(&m)) {
    json parts = json::array();
    for (size_t p = 0; p < partition->parts().size(); ++p) {
      parts.push_back({{"members", partition->parts()[p]},
                       {"capacity", partition->capacities()[p]}});
    }
    matroid["parts"] = std::move(parts);
  } else if (const auto* graphic = dynamic_cast<const GraphicMatroid*>(&m)) {
    matroid["vertices"] = graphic->num_vertices();
    json edges = json::array();
    for (const auto& [u, v] : graphic->edges()) edges.push_back({u, v});
    matroid["edges"] = std::move(edges);
  } else if (const auto* laminar = dynamic_cast<const LaminarMatroid*>(&m)) {
    json sets = json::array();
    for (const LaminarSet& set : laminar->tree().family()) {
      sets.push_back({{"members", set.members}, {"capacity", set.capacity}});
    }
    matroid["sets"] = std::move(sets);
  }
  doc["matroid"] = std::move(matroid);
  return doc.dump(2);
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError(ValidationIssue::kInvalidParams, "cannot write instance file " + path);
  }
  out << instance_to_json(instance) << '\n';
}

}  // namespace matsec
