#pragma once

// Model JSON format:
//   { "worlds": [...], "agents": [...],
//     "relations": { "<agent>": {"partition": [[w,...],...]} | {"pairs": [[w,v],...]} },
//     "valuation": { "<atom>": [w,...] } }
// Pair lists may omit reflexive pairs and are closed under symmetry;
// transitivity is checked, never inferred.

#include <string>

#include "json.hpp"

#include "glal/model.hpp"

namespace glal {

/// Throws FormatError (schema) or InvalidModel (carrying the violations).
KripkeModel load_model(const std::string& text);
KripkeModel model_from_json(const nlohmann::json& j);

/// Canonical form: sorted worlds/agents, per-agent partitions in world order.
nlohmann::json model_to_json(const KripkeModel& m);
std::string save_model(const KripkeModel& m);

KripkeModel load_model_file(const std::string& path);

}  // namespace glal
