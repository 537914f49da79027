#include "glal/model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace glal {

const char* violation_kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::reflexivity: return "reflexivity";
    case Violation::Kind::symmetry: return "symmetry";
    case Violation::Kind::transitivity: return "transitivity";
    case Violation::Kind::dangling_reference: return "dangling-reference";
    case Violation::Kind::duplicate_name: return "duplicate-name";
  }
  return "?";
}

namespace {

std::string summarize(const std::vector<Violation>& vs) {
  std::string out = "invalid model: " + std::to_string(vs.size()) + " violation(s)";
  if (!vs.empty()) out += "; first: " + vs.front().message;
  return out;
}

constexpr std::size_t kMaxViolations = 10000;

}  // namespace

InvalidModel::InvalidModel(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const ModelDraft& draft) {
  std::vector<Violation> out;
  auto add = [&out](Violation v) {
    if (out.size() < kMaxViolations) out.push_back(std::move(v));
  };

  std::unordered_map<std::string, std::size_t> index;
  for (const auto& w : draft.worlds) {
    if (!index.emplace(w, index.size()).second) {
      add({Violation::Kind::duplicate_name, "", {w}, "world '" + w + "' listed twice"});
    }
  }
  std::set<std::string> agents;
  for (const auto& a : draft.agents) {
    if (!agents.insert(a).second) {
      add({Violation::Kind::duplicate_name, a, {a}, "agent '" + a + "' listed twice"});
    }
  }
  for (const auto& [a, pairs] : draft.relations) {
    if (!agents.count(a)) {
      add({Violation::Kind::dangling_reference, a, {a}, "relation for undeclared agent '" + a + "'"});
    }
    for (const auto& [u, v] : pairs) {
      for (const auto* name : {&u, &v}) {
        if (!index.count(*name)) {
          add({Violation::Kind::dangling_reference, a, {*name},
               "relation of '" + a + "' mentions undeclared world '" + *name + "'"});
        }
      }
    }
  }
  for (const auto& [p, ws] : draft.valuation) {
    for (const auto& w : ws) {
      if (!index.count(w)) {
        add({Violation::Kind::dangling_reference, "", {w},
             "valuation of '" + p + "' mentions undeclared world '" + w + "'"});
      }
    }
  }

  const std::size_t n = draft.worlds.size();
  for (const auto& a : draft.agents) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    if (auto it = draft.relations.find(a); it != draft.relations.end()) {
      for (const auto& [u, v] : it->second) {
        auto iu = index.find(u);
        auto iv = index.find(v);
        if (iu != index.end() && iv != index.end()) rel[iu->second][iv->second] = true;
      }
    }
    const auto& W = draft.worlds;
    for (std::size_t x = 0; x < n; ++x) {
      if (!rel[x][x]) {
        add({Violation::Kind::reflexivity, a, {W[x], W[x]},
             "agent '" + a + "': missing (" + W[x] + "," + W[x] + ")"});
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (rel[x][y] && !rel[y][x]) {
          add({Violation::Kind::symmetry, a, {W[y], W[x]},
               "agent '" + a + "': missing (" + W[y] + "," + W[x] + ")"});
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!rel[x][y]) continue;
        for (std::size_t z = 0; z < n; ++z) {
          if (rel[y][z] && !rel[x][z]) {
            add({Violation::Kind::transitivity, a, {W[x], W[y], W[z]},
                 "agent '" + a + "': (" + W[x] + "," + W[y] + ") and (" + W[y] + "," + W[z] +
                     ") but missing (" + W[x] + "," + W[z] + ")"});
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// KripkeModel

KripkeModel::KripkeModel(std::vector<std::string> worlds, std::vector<std::string> agents,
                         const std::vector<std::vector<std::uint32_t>>& labels,
                         std::map<std::string, WorldSet> valuation)
    : worlds_(std::move(worlds)), agents_(std::move(agents)) {
  const std::size_t n = worlds_.size();
  if (labels.size() != agents_.size()) throw InvariantBreach("label table does not match agents");
  labels_.resize(agents_.size());
  cells_.resize(agents_.size());
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    if (labels[a].size() != n) throw InvariantBreach("label table does not match worlds");
    std::unordered_map<std::uint32_t, std::uint32_t> renumber;
    labels_[a].resize(n);
    for (std::size_t w = 0; w < n; ++w) {
      auto [it, fresh] = renumber.emplace(labels[a][w], static_cast<std::uint32_t>(renumber.size()));
      if (fresh) cells_[a].emplace_back(n);
      labels_[a][w] = it->second;
      cells_[a][it->second].set(w);
    }
  }
  for (auto& [p, set] : valuation) {
    if (set.size() != n) throw InvariantBreach("valuation set has wrong width");
    if (set.any()) valuation_.emplace(p, std::move(set));
  }
}

KripkeModel KripkeModel::from_partitions(
    std::vector<std::string> worlds, std::vector<std::string> agents,
    const std::map<std::string, std::vector<std::vector<std::string>>>& cells,
    const std::map<std::string, std::vector<std::string>>& valuation) {
  std::vector<Violation> problems;
  std::sort(worlds.begin(), worlds.end());
  std::sort(agents.begin(), agents.end());
  for (std::size_t i = 1; i < worlds.size(); ++i) {
    if (worlds[i] == worlds[i - 1]) {
      problems.push_back({Violation::Kind::duplicate_name, "", {worlds[i]}, "world '" + worlds[i] + "' listed twice"});
    }
  }
  for (std::size_t i = 1; i < agents.size(); ++i) {
    if (agents[i] == agents[i - 1]) {
      problems.push_back({Violation::Kind::duplicate_name, agents[i], {agents[i]}, "agent '" + agents[i] + "' listed twice"});
    }
  }
  if (!problems.empty()) throw InvalidModel(std::move(problems));

  auto index_of = [&worlds](const std::string& w) -> std::optional<std::size_t> {
    auto it = std::lower_bound(worlds.begin(), worlds.end(), w);
    if (it == worlds.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - worlds.begin());
  };

  for (const auto& [a, unused] : cells) {
    if (!std::binary_search(agents.begin(), agents.end(), a)) {
      problems.push_back({Violation::Kind::dangling_reference, a, {a}, "relation for undeclared agent '" + a + "'"});
    }
  }
  std::vector<std::vector<std::uint32_t>> labels;
  for (const auto& a : agents) {
    auto it = cells.find(a);
    if (it == cells.end()) throw FormatError("no relation given for agent '" + a + "'");
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> lab(worlds.size(), unset);
    for (std::size_t c = 0; c < it->second.size(); ++c) {
      if (it->second[c].empty()) throw FormatError("agent '" + a + "': empty partition cell");
      for (const auto& w : it->second[c]) {
        auto idx = index_of(w);
        if (!idx) throw FormatError("agent '" + a + "': partition mentions undeclared world '" + w + "'");
        if (lab[*idx] != unset) {
          throw FormatError("agent '" + a + "': world '" + w + "' appears in more than one cell");
        }
        lab[*idx] = static_cast<std::uint32_t>(c);
      }
    }
    for (std::size_t w = 0; w < worlds.size(); ++w) {
      if (lab[w] == unset) throw FormatError("agent '" + a + "': world '" + worlds[w] + "' is in no cell");
    }
    labels.push_back(std::move(lab));
  }

  std::map<std::string, WorldSet> val;
  for (const auto& [p, ws] : valuation) {
    WorldSet set(worlds.size());
    for (const auto& w : ws) {
      auto idx = index_of(w);
      if (!idx) {
        problems.push_back({Violation::Kind::dangling_reference, "", {w},
                            "valuation of '" + p + "' mentions undeclared world '" + w + "'"});
        continue;
      }
      set.set(*idx);
    }
    val.emplace(p, std::move(set));
  }
  if (!problems.empty()) throw InvalidModel(std::move(problems));
  return KripkeModel(std::move(worlds), std::move(agents), labels, std::move(val));
}

KripkeModel KripkeModel::from_draft(const ModelDraft& draft) {
  auto violations = validate(draft);
  if (!violations.empty()) throw InvalidModel(std::move(violations));

  std::vector<std::string> worlds = draft.worlds;
  std::vector<std::string> agents = draft.agents;
  std::sort(worlds.begin(), worlds.end());
  std::sort(agents.begin(), agents.end());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < worlds.size(); ++i) index.emplace(worlds[i], i);

  std::vector<std::vector<std::uint32_t>> labels;
  for (const auto& a : agents) {
    // A valid relation is an equivalence, so labelling each world by its least
    // related world is a partition.
    std::vector<std::uint32_t> lab(worlds.size());
    std::iota(lab.begin(), lab.end(), 0U);
    if (auto it = draft.relations.find(a); it != draft.relations.end()) {
      for (const auto& [u, v] : it->second) {
        std::size_t x = index.at(u), y = index.at(v);
        lab[x] = std::min<std::uint32_t>(lab[x], static_cast<std::uint32_t>(y));
      }
    }
    labels.push_back(std::move(lab));
  }
  std::map<std::string, WorldSet> val;
  for (const auto& [p, ws] : draft.valuation) {
    WorldSet set(worlds.size());
    for (const auto& w : ws) set.set(index.at(w));
    val.emplace(p, std::move(set));
  }
  return KripkeModel(std::move(worlds), std::move(agents), labels, std::move(val));
}

std::optional<WorldIndex> KripkeModel::world_index(const std::string& name) const {
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), name);
  if (it == worlds_.end() || *it != name) return std::nullopt;
  return static_cast<WorldIndex>(it - worlds_.begin());
}

std::optional<AgentIndex> KripkeModel::agent_index(const std::string& name) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), name);
  if (it == agents_.end() || *it != name) return std::nullopt;
  return static_cast<AgentIndex>(it - agents_.begin());
}

WorldIndex KripkeModel::require_world(const std::string& name) const {
  if (auto w = world_index(name)) return *w;
  throw UnknownWorld(name);
}

AgentIndex KripkeModel::require_agent(const std::string& name) const {
  if (auto a = agent_index(name)) return *a;
  throw UnknownAgent(name);
}

std::vector<AgentIndex> KripkeModel::require_agents(const Coalition& group) const {
  std::vector<AgentIndex> out;
  if (group.is_all()) {
    out.resize(agents_.size());
    std::iota(out.begin(), out.end(), AgentIndex{0});
    return out;
  }
  for (const auto& a : group.members()) out.push_back(require_agent(a));
  return out;
}

WorldSet KripkeModel::truth(const std::string& atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? none() : it->second;
}

std::vector<std::string> KripkeModel::atoms() const {
  std::vector<std::string> out;
  for (const auto& [p, unused] : valuation_) out.push_back(p);
  return out;
}

bool operator==(const KripkeModel& a, const KripkeModel& b) {
  return a.worlds_ == b.worlds_ && a.agents_ == b.agents_ && a.labels_ == b.labels_ &&
         a.valuation_ == b.valuation_;
}

PointedModel PointedModel::at(KripkeModel model, const std::string& world) {
  WorldIndex w = model.require_world(world);
  return PointedModel{std::move(model), w};
}

// ---------------------------------------------------------------------------
// Relational queries

WorldSet union_reach(const KripkeModel& m, const std::vector<AgentIndex>& group, WorldIndex w) {
  WorldSet out = m.none();
  for (AgentIndex a : group) out |= m.cell(a, w);
  return out;
}

WorldSet common_closure(const KripkeModel& m, const std::vector<AgentIndex>& group, WorldIndex w) {
  WorldSet reached = m.none();
  reached.set(w);
  std::vector<WorldIndex> frontier{w};
  while (!frontier.empty()) {
    WorldIndex v = frontier.back();
    frontier.pop_back();
    for (AgentIndex a : group) {
      const WorldSet& c = m.cell(a, v);
      if (c.is_subset_of(reached)) continue;
      WorldSet fresh = c - reached;
      reached |= c;
      for (auto u = fresh.find_first(); u != WorldSet::npos; u = fresh.find_next(u)) frontier.push_back(u);
    }
  }
  return reached;
}

std::vector<std::uint32_t> closure_labels(const KripkeModel& m, const std::vector<AgentIndex>& group) {
  const std::size_t n = m.world_count();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (AgentIndex a : group) {
    const auto& lab = m.labels(a);
    std::vector<std::int64_t> first(m.cells(a).size(), -1);
    for (std::size_t w = 0; w < n; ++w) {
      auto& f = first[lab[w]];
      if (f < 0) {
        f = static_cast<std::int64_t>(w);
      } else {
        auto x = find(static_cast<std::uint32_t>(f));
        auto y = find(static_cast<std::uint32_t>(w));
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t w = 0; w < n; ++w) out[w] = find(static_cast<std::uint32_t>(w));
  return out;
}

WorldSet intersection_cell(const KripkeModel& m, const std::vector<AgentIndex>& group, WorldIndex w) {
  if (group.empty()) {
    WorldSet out = m.none();
    out.set(w);
    return out;
  }
  WorldSet out = m.cell(group.front(), w);
  for (std::size_t i = 1; i < group.size(); ++i) out &= m.cell(group[i], w);
  return out;
}

std::vector<bool> profile(const KripkeModel& m, WorldIndex w, WorldIndex v) {
  std::vector<bool> out(m.agent_count());
  for (AgentIndex a = 0; a < m.agent_count(); ++a) out[a] = m.related(a, w, v);
  return out;
}

std::set<std::string> world_names(const KripkeModel& m, const WorldSet& set) {
  std::set<std::string> out;
  for (auto w = set.find_first(); w != WorldSet::npos; w = set.find_next(w)) out.insert(m.worlds()[w]);
  return out;
}

std::vector<std::string> world_list(const KripkeModel& m, const WorldSet& set) {
  std::vector<std::string> out;
  for (auto w = set.find_first(); w != WorldSet::npos; w = set.find_next(w)) out.push_back(m.worlds()[w]);
  return out;
}

std::set<std::string> neighborhood(const KripkeModel& m, const std::string& agent, const std::string& world) {
  AgentIndex a = m.require_agent(agent);
  return world_names(m, m.cell(a, m.require_world(world)));
}

std::set<std::string> common_closure(const KripkeModel& m, const Coalition& group, const std::string& world) {
  auto agents = m.require_agents(group);
  return world_names(m, common_closure(m, agents, m.require_world(world)));
}

std::set<std::string> union_reach(const KripkeModel& m, const Coalition& group, const std::string& world) {
  auto agents = m.require_agents(group);
  return world_names(m, union_reach(m, agents, m.require_world(world)));
}

Coalition exact_profile(const KripkeModel& m, const std::string& w, const std::string& v) {
  WorldIndex x = m.require_world(w);
  WorldIndex y = m.require_world(v);
  std::vector<std::string> members;
  for (AgentIndex a = 0; a < m.agent_count(); ++a) {
    if (m.related(a, x, y)) members.push_back(m.agents()[a]);
  }
  return Coalition(std::move(members));
}

ModelDraft to_draft(const KripkeModel& m) {
  ModelDraft d;
  d.worlds = m.worlds();
  d.agents = m.agents();
  for (AgentIndex a = 0; a < m.agent_count(); ++a) {
    auto& pairs = d.relations[m.agents()[a]];
    for (WorldIndex w = 0; w < m.world_count(); ++w) {
      const WorldSet& c = m.cell(a, w);
      for (auto v = c.find_first(); v != WorldSet::npos; v = c.find_next(v)) {
        pairs.emplace_back(m.worlds()[w], m.worlds()[v]);
      }
    }
  }
  for (const auto& [p, set] : m.valuation()) d.valuation[p] = world_list(m, set);
  return d;
}

std::vector<Violation> validate(const KripkeModel& m) { return validate(to_draft(m)); }

}  // namespace glal
