#include "glal/scenarios.hpp"

#include "glal/semantics.hpp"

namespace glal {

std::vector<std::string> muddy_agents(int n) {
  std::vector<std::string> out;
  const char* first[] = {"r", "g", "b"};
  for (int i = 0; i < n; ++i) out.push_back(i < 3 ? first[i] : "c" + std::to_string(i + 1));
  return out;
}

std::string muddy_atom(const std::string& agent) { return "m_" + agent; }

KripkeModel muddy(int n) {
  if (n < 1 || n > 10) throw BoundExceeded("muddy(n) needs 1 <= n <= 10, got " + std::to_string(n));
  auto agents = muddy_agents(n);
  std::vector<std::string> worlds;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) {
      if (bits >> i & 1u) s[i] = '1';
    }
    worlds.push_back(s);
  }
  std::map<std::string, std::vector<std::vector<std::string>>> cells;
  std::map<std::string, std::vector<std::string>> val;
  for (int i = 0; i < n; ++i) {
    auto& cs = cells[agents[i]];
    for (const auto& w : worlds) {
      if (w[i] == '1') {
        val[muddy_atom(agents[i])].push_back(w);
        continue;
      }
      std::string u = w;
      u[i] = '1';
      cs.push_back({w, u});
    }
  }
  return KripkeModel::from_partitions(worlds, agents, cells, val);
}

Formula muddy_alpha(int n) {
  std::vector<Formula> fs;
  for (const auto& a : muddy_agents(n)) fs.push_back(atom(muddy_atom(a)));
  return disj_all(fs);
}

Formula muddy_no_stepping(int n) {
  std::vector<Formula> fs;
  for (const auto& a : muddy_agents(n)) fs.push_back(neg(know_whether(a, atom(muddy_atom(a)))));
  return conj_all(fs);
}

Formula muddy_all_know(int n) {
  std::vector<Formula> fs;
  for (const auto& a : muddy_agents(n)) {
    fs.push_back(implies(atom(muddy_atom(a)), know_whether(a, atom(muddy_atom(a)))));
  }
  return conj_all(fs);
}

KripkeModel bit_channel(ChannelVariant variant) {
  if (variant == ChannelVariant::N) {
    return KripkeModel::from_partitions({"w1", "w2"}, {"s", "r", "e"},
                                        {{"s", {{"w1"}, {"w2"}}}, {"r", {{"w1", "w2"}}}, {"e", {{"w1", "w2"}}}},
                                        {{"bit0", {"w1"}}});
  }
  return KripkeModel::from_partitions({"v1", "v2", "w1", "w2"}, {"s", "r", "e"},
                                      {{"s", {{"v1", "w1"}, {"v2", "w2"}}},
                                       {"r", {{"v1", "v2"}, {"w1", "w2"}}},
                                       {"e", {{"v1", "v2", "w1", "w2"}}}},
                                      {{"bit0", {"v1", "w1"}}});
}

int muddy_size(const KripkeModel& m) {
  int n = static_cast<int>(m.agent_count());
  if (n < 1 || n > 10 || m.world_count() != (std::size_t{1} << n)) {
    throw FormatError("not a muddy-children model");
  }
  auto names = muddy_agents(n);
  for (const auto& a : names) m.require_agent(a);
  return n;
}

PointedModel muddy_round(const PointedModel& p, RoundKind kind, std::optional<Coalition> coalition) {
  int n = muddy_size(p.model);
  Coalition everyone = Coalition::all();
  const std::string& w = p.point_name();
  switch (kind) {
    case RoundKind::father_local:
      return PointedModel{refine_local(p.model, w, muddy_alpha(n), everyone), p.point};
    case RoundKind::father_global:
      return PointedModel{refine_global(p.model, w, muddy_alpha(n), coalition.value_or(everyone)), p.point};
    case RoundKind::no_stepping:
      return PointedModel{refine_global(p.model, w, muddy_no_stepping(n), everyone), p.point};
  }
  return p;
}

}  // namespace glal
