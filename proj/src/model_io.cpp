#include "glal/model_io.hpp"

#include <fstream>
#include <sstream>

namespace glal {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError(what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

KripkeModel model_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("model must be a JSON object");
  for (const char* key : {"worlds", "agents", "relations"}) {
    if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  }
  for (const auto& [key, unused] : j.items()) {
    if (key != "worlds" && key != "agents" && key != "relations" && key != "valuation") {
      throw FormatError("unknown field '" + key + "'");
    }
  }
  auto worlds = string_list(j.at("worlds"), "'worlds'");
  auto agents = string_list(j.at("agents"), "'agents'");
  if (worlds.empty()) throw FormatError("a model needs at least one world");

  std::map<std::string, std::vector<std::string>> valuation;
  if (j.contains("valuation")) {
    const auto& v = j.at("valuation");
    if (!v.is_object()) throw FormatError("'valuation' must be an object");
    for (const auto& [p, ws] : v.items()) valuation[p] = string_list(ws, "valuation of '" + p + "'");
  }

  const auto& rel = j.at("relations");
  if (!rel.is_object()) throw FormatError("'relations' must be an object");
  bool any_pairs = false;
  std::map<std::string, std::vector<std::vector<std::string>>> cells;
  ModelDraft draft;
  draft.worlds = worlds;
  draft.agents = agents;
  draft.valuation = valuation;
  for (const auto& [a, spec] : rel.items()) {
    if (!spec.is_object() || spec.size() != 1 || !(spec.contains("partition") || spec.contains("pairs"))) {
      throw FormatError("relation of '" + a + "' must be {\"partition\": ...} or {\"pairs\": ...}");
    }
    if (spec.contains("partition")) {
      const auto& p = spec.at("partition");
      if (!p.is_array()) throw FormatError("partition of '" + a + "' must be an array of arrays");
      auto& out = cells[a];
      for (const auto& cell : p) out.push_back(string_list(cell, "partition cell of '" + a + "'"));
    } else {
      any_pairs = true;
      const auto& ps = spec.at("pairs");
      if (!ps.is_array()) throw FormatError("pairs of '" + a + "' must be an array");
      auto& out = draft.relations[a];
      for (const auto& pr : ps) {
        auto two = string_list(pr, "pair of '" + a + "'");
        if (two.size() != 2) throw FormatError("pair of '" + a + "' must have two worlds");
        out.emplace_back(two[0], two[1]);
        out.emplace_back(two[1], two[0]);
      }
    }
  }
  for (const auto& a : agents) {
    if (!rel.contains(a)) throw FormatError("no relation given for agent '" + a + "'");
  }
  if (!any_pairs) return KripkeModel::from_partitions(worlds, agents, cells, valuation);

  // Mixed input: convert partitions to pairs, add reflexive pairs, then validate.
  for (const auto& [a, cs] : cells) {
    auto& out = draft.relations[a];
    std::set<std::string> seen;
    for (const auto& c : cs) {
      for (const auto& u : c) {
        if (!seen.insert(u).second) {
          throw FormatError("agent '" + a + "': world '" + u + "' appears in more than one cell");
        }
        for (const auto& v : c) out.emplace_back(u, v);
      }
    }
    for (const auto& w : worlds) {
      if (!seen.count(w)) throw FormatError("agent '" + a + "': world '" + w + "' is in no cell");
    }
  }
  for (const auto& a : agents) {
    for (const auto& w : worlds) draft.relations[a].emplace_back(w, w);
  }
  return KripkeModel::from_draft(draft);
}

KripkeModel load_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return model_from_json(j);
}

KripkeModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

json model_to_json(const KripkeModel& m) {
  json j;
  j["worlds"] = m.worlds();
  j["agents"] = m.agents();
  json rel = json::object();
  for (AgentIndex a = 0; a < m.agent_count(); ++a) {
    json part = json::array();
    for (const auto& c : m.cells(a)) part.push_back(world_list(m, c));
    rel[m.agents()[a]] = {{"partition", part}};
  }
  j["relations"] = rel;
  json val = json::object();
  for (const auto& [p, set] : m.valuation()) val[p] = world_list(m, set);
  j["valuation"] = val;
  return j;
}

std::string save_model(const KripkeModel& m) { return model_to_json(m).dump(2); }

}  // namespace glal
