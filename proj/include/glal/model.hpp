#pragma once

// Kripke models with per-agent equivalence relations, stored as partitions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "glal/errors.hpp"
#include "glal/syntax.hpp"

namespace glal {

using WorldSet = boost::dynamic_bitset<std::uint64_t>;
using WorldIndex = std::size_t;
using AgentIndex = std::size_t;

/// Unchecked model description, as read from a file or produced by a
/// refinement before validation. Relations are pair lists by name.
struct ModelDraft {
  std::vector<std::string> worlds;
  std::vector<std::string> agents;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations;
  std::map<std::string, std::vector<std::string>> valuation;
};

struct Violation {
  enum class Kind { reflexivity, symmetry, transitivity, dangling_reference, duplicate_name };

  Kind kind;
  std::string agent;                 // empty for non-relational violations
  std::vector<std::string> witness;  // world names (pair or triple) or the dangling name
  std::string message;
};

const char* violation_kind_name(Violation::Kind k);

class InvalidModel : public Error {
 public:
  explicit InvalidModel(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Brute-force check of every model invariant; empty iff the draft is a valid model.
std::vector<Violation> validate(const ModelDraft& draft);

class KripkeModel {
 public:
  /// Per-agent partition given as cells of world names. Throws FormatError if
  /// some agent's cells are not a partition of `worlds`, InvalidModel on
  /// dangling names.
  static KripkeModel from_partitions(std::vector<std::string> worlds, std::vector<std::string> agents,
                                     const std::map<std::string, std::vector<std::vector<std::string>>>& cells,
                                     const std::map<std::string, std::vector<std::string>>& valuation);

  /// Throws InvalidModel carrying validate(draft) when it is not empty.
  static KripkeModel from_draft(const ModelDraft& draft);

  /// Index-level constructor for already-sorted worlds/agents. `labels[a][w]`
  /// is the cell id of world w for agent a (any numbering).
  KripkeModel(std::vector<std::string> worlds, std::vector<std::string> agents,
              const std::vector<std::vector<std::uint32_t>>& labels,
              std::map<std::string, WorldSet> valuation);

  std::size_t world_count() const { return worlds_.size(); }
  std::size_t agent_count() const { return agents_.size(); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::vector<std::string>& agents() const { return agents_; }

  std::optional<WorldIndex> world_index(const std::string& name) const;
  std::optional<AgentIndex> agent_index(const std::string& name) const;
  WorldIndex require_world(const std::string& name) const;
  AgentIndex require_agent(const std::string& name) const;
  /// Agent indices of a coalition; `*` resolves to every agent.
  std::vector<AgentIndex> require_agents(const Coalition& group) const;

  /// R_a(w): the equivalence class of w for agent a.
  const WorldSet& cell(AgentIndex a, WorldIndex w) const { return cells_[a][labels_[a][w]]; }
  std::uint32_t label(AgentIndex a, WorldIndex w) const { return labels_[a][w]; }
  /// Cell ids numbered by first occurrence in world order.
  const std::vector<std::uint32_t>& labels(AgentIndex a) const { return labels_[a]; }
  const std::vector<WorldSet>& cells(AgentIndex a) const { return cells_[a]; }
  bool related(AgentIndex a, WorldIndex w, WorldIndex v) const { return labels_[a][w] == labels_[a][v]; }

  /// Worlds where `atom` holds; empty set for atoms absent from the valuation.
  WorldSet truth(const std::string& atom) const;
  const std::map<std::string, WorldSet>& valuation() const { return valuation_; }
  std::vector<std::string> atoms() const;

  WorldSet none() const { return WorldSet(worlds_.size()); }
  WorldSet every() const { return ~WorldSet(worlds_.size()); }

  friend bool operator==(const KripkeModel& a, const KripkeModel& b);

 private:
  std::vector<std::string> worlds_;
  std::vector<std::string> agents_;
  std::vector<std::vector<std::uint32_t>> labels_;
  std::vector<std::vector<WorldSet>> cells_;
  std::map<std::string, WorldSet> valuation_;  // only atoms true somewhere
};

struct PointedModel {
  KripkeModel model;
  WorldIndex point;

  /// Throws UnknownWorld.
  static PointedModel at(KripkeModel model, const std::string& world);
  const std::string& point_name() const { return model.worlds()[point]; }
};

// Index-level relational queries.
WorldSet union_reach(const KripkeModel& m, const std::vector<AgentIndex>& group, WorldIndex w);
WorldSet common_closure(const KripkeModel& m, const std::vector<AgentIndex>& group, WorldIndex w);
/// Connected-component id of every world under the union of `group`'s relations.
std::vector<std::uint32_t> closure_labels(const KripkeModel& m, const std::vector<AgentIndex>& group);
/// Intersection of the group's cells at w; {w} for the empty group.
WorldSet intersection_cell(const KripkeModel& m, const std::vector<AgentIndex>& group, WorldIndex w);
/// Bitmask over agent indices relating w and v (the exact profile).
std::vector<bool> profile(const KripkeModel& m, WorldIndex w, WorldIndex v);

// Name-level operations. Throw UnknownAgent / UnknownWorld.
std::set<std::string> neighborhood(const KripkeModel& m, const std::string& agent, const std::string& world);
std::set<std::string> common_closure(const KripkeModel& m, const Coalition& group, const std::string& world);
std::set<std::string> union_reach(const KripkeModel& m, const Coalition& group, const std::string& world);
Coalition exact_profile(const KripkeModel& m, const std::string& w, const std::string& v);

std::set<std::string> world_names(const KripkeModel& m, const WorldSet& set);
std::vector<std::string> world_list(const KripkeModel& m, const WorldSet& set);

/// Pair-list view of a model (every pair of every relation, including reflexive ones).
ModelDraft to_draft(const KripkeModel& m);
std::vector<Violation> validate(const KripkeModel& m);

}  // namespace glal
