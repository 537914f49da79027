#pragma once

// Brute-force reference semantics: relations as boolean matrices, every
// clause evaluated from its definition at a single world, refinements built
// pair by pair. Exponential in announcement nesting; only for small inputs.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "glal/model.hpp"
#include "glal/syntax.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

struct Model {
  std::vector<std::string> agents;
  std::vector<Matrix> rel;  // rel[a][w][v]
  std::map<std::string, std::vector<bool>> val;
  std::size_t size() const { return rel.empty() ? n : rel[0].size(); }
  std::size_t n = 0;
};

inline Model from(const glal::KripkeModel& m) {
  auto d = glal::to_draft(m);
  Model o;
  o.n = d.worlds.size();
  o.agents = d.agents;
  auto index = [&](const std::string& w) {
    return static_cast<std::size_t>(std::find(d.worlds.begin(), d.worlds.end(), w) - d.worlds.begin());
  };
  for (const auto& a : d.agents) {
    Matrix r(o.n, std::vector<bool>(o.n, false));
    for (const auto& [x, y] : d.relations.at(a)) r[index(x)][index(y)] = true;
    o.rel.push_back(r);
  }
  for (const auto& [p, ws] : d.valuation) {
    std::vector<bool> t(o.n, false);
    for (const auto& w : ws) t[index(w)] = true;
    o.val[p] = t;
  }
  return o;
}

inline std::vector<std::size_t> agents_of(const Model& m, const glal::Coalition& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.agents.size(); ++i) {
    if (c.is_all() || c.contains(m.agents[i])) out.push_back(i);
  }
  for (const auto& name : c.members()) {
    if (std::find(m.agents.begin(), m.agents.end(), name) == m.agents.end()) throw glal::UnknownAgent(name);
  }
  return out;
}

inline std::vector<bool> reach(const Model& m, const std::vector<std::size_t>& group, std::size_t w) {
  std::vector<bool> seen(m.size(), false);
  seen[w] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t u = 0; u < m.size(); ++u) {
      if (!seen[u]) continue;
      for (auto a : group) {
        for (std::size_t v = 0; v < m.size(); ++v) {
          if (m.rel[a][u][v] && !seen[v]) seen[v] = grew = true;
        }
      }
    }
  }
  return seen;
}

bool holds(const Model& m, std::size_t w, const glal::Formula& f);

inline Model refine(const Model& m, std::size_t w, const glal::Formula& psi, const std::vector<std::size_t>& group,
                    bool global) {
  std::vector<bool> truth(m.size());
  for (std::size_t v = 0; v < m.size(); ++v) truth[v] = holds(m, v, psi);
  Model out = m;
  auto closure = reach(m, group, w);
  for (auto a : group) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      bool in_scope = global ? closure[v] : m.rel[a][w][v];
      if (!in_scope) continue;
      for (std::size_t u = 0; u < m.size(); ++u) {
        if (truth[u] != truth[v]) out.rel[a][v][u] = false;
      }
    }
  }
  return out;
}

inline bool holds(const Model& m, std::size_t w, const glal::Formula& f) {
  using glal::Kind;
  auto agent = [&](const std::string& name) {
    auto it = std::find(m.agents.begin(), m.agents.end(), name);
    if (it == m.agents.end()) throw glal::UnknownAgent(name);
    return static_cast<std::size_t>(it - m.agents.begin());
  };
  auto box = [&](const std::vector<bool>& acc, const glal::Formula& g) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (acc[v] && !holds(m, v, g)) return false;
    }
    return true;
  };
  auto row = [&](std::size_t a) { return m.rel[a][w]; };
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = m.val.find(f.name());
      return it != m.val.end() && it->second[w];
    }
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Not: return !holds(m, w, f.operand());
    case Kind::And: return holds(m, w, f.lhs()) && holds(m, w, f.rhs());
    case Kind::Or: return holds(m, w, f.lhs()) || holds(m, w, f.rhs());
    case Kind::Implies: return !holds(m, w, f.lhs()) || holds(m, w, f.rhs());
    case Kind::Iff: return holds(m, w, f.lhs()) == holds(m, w, f.rhs());
    case Kind::Know: return box(row(agent(f.agent())), f.operand());
    case Kind::Dual: return !box(row(agent(f.agent())), glal::neg(f.operand()));
    case Kind::KnowWhether: {
      auto r = row(agent(f.agent()));
      return box(r, f.operand()) || box(r, glal::neg(f.operand()));
    }
    case Kind::Everybody: {
      for (auto a : agents_of(m, f.coalition())) {
        if (!box(row(a), f.operand())) return false;
      }
      return true;
    }
    case Kind::Common: return box(reach(m, agents_of(m, f.coalition()), w), f.operand());
    case Kind::Distributed: {
      std::vector<bool> acc(m.size(), true);
      auto group = agents_of(m, f.coalition());
      if (group.empty()) {
        std::fill(acc.begin(), acc.end(), false);
        acc[w] = true;
      }
      for (auto a : group) {
        for (std::size_t v = 0; v < m.size(); ++v) acc[v] = acc[v] && m.rel[a][w][v];
      }
      return box(acc, f.operand());
    }
    case Kind::AnnLocal:
    case Kind::AnnGlobal:
    case Kind::DiaLocal:
    case Kind::DiaGlobal: {
      bool global = f.kind() == Kind::AnnGlobal || f.kind() == Kind::DiaGlobal;
      bool diamond = f.kind() == Kind::DiaLocal || f.kind() == Kind::DiaGlobal;
      auto group = agents_of(m, f.coalition());
      if (!holds(m, w, f.announced())) return !diamond;
      return holds(refine(m, w, f.announced(), group, global), w, f.body());
    }
    case Kind::PalAnn: {
      if (!holds(m, w, f.announced())) return true;
      std::vector<std::size_t> keep;
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (holds(m, v, f.announced())) keep.push_back(v);
      }
      Model sub;
      sub.agents = m.agents;
      sub.n = keep.size();
      for (const auto& r : m.rel) {
        Matrix s(keep.size(), std::vector<bool>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i) {
          for (std::size_t j = 0; j < keep.size(); ++j) s[i][j] = r[keep[i]][keep[j]];
        }
        sub.rel.push_back(s);
      }
      for (const auto& [p, t] : m.val) {
        std::vector<bool> s;
        for (auto v : keep) s.push_back(t[v]);
        sub.val[p] = s;
      }
      std::size_t at = static_cast<std::size_t>(std::find(keep.begin(), keep.end(), w) - keep.begin());
      return holds(sub, at, f.body());
    }
  }
  return false;
}

inline bool holds(const glal::KripkeModel& m, const std::string& w, const glal::Formula& f) {
  return holds(from(m), m.require_world(w), f);
}

// Plus-minus, modal and collective bisimulations by enumerating every relation.
// `kind`: 0 modal, 1 plus-minus, 2 collective.
inline bool is_bisimulation(const Model& l, const Model& r, const Matrix& b, int kind) {
  const std::size_t k = l.agents.size();
  auto prof = [&](const Model& m, std::size_t x, std::size_t y) {
    std::vector<bool> p;
    for (std::size_t a = 0; a < k; ++a) p.push_back(m.rel[a][x][y]);
    return p;
  };
  auto sub = [](const std::vector<bool>& a, const std::vector<bool>& c) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && !c[i]) return false;
    }
    return true;
  };
  auto one_way = [&](const Model& m1, const Model& m2, auto rel) {
    for (std::size_t w = 0; w < m1.size(); ++w) {
      for (std::size_t w2 = 0; w2 < m2.size(); ++w2) {
        if (!rel(w, w2)) continue;
        for (const auto& [p, t] : m1.val) {
          auto it = m2.val.find(p);
          if (t[w] != (it != m2.val.end() && it->second[w2])) return false;
        }
        for (const auto& [p, t] : m2.val) {
          if (!m1.val.count(p) && t[w2]) return false;
        }
        for (std::size_t v = 0; v < m1.size(); ++v) {
          auto pv = prof(m1, w, v);
          if (kind == 0) {
            for (std::size_t a = 0; a < k; ++a) {
              if (!pv[a]) continue;
              bool ok = false;
              for (std::size_t v2 = 0; v2 < m2.size() && !ok; ++v2) ok = m2.rel[a][w2][v2] && rel(v, v2);
              if (!ok) return false;
            }
            continue;
          }
          if (kind == 2 && std::none_of(pv.begin(), pv.end(), [](bool x) { return x; })) continue;
          bool ok = false;
          for (std::size_t v2 = 0; v2 < m2.size() && !ok; ++v2) {
            auto q = prof(m2, w2, v2);
            ok = (kind == 1 ? q == pv : sub(pv, q)) && rel(v, v2);
          }
          if (!ok) return false;
          if (kind == 1) {
            for (std::size_t v2 = 0; v2 < m2.size(); ++v2) {
              if (rel(v, v2) && prof(m2, w2, v2) != pv) return false;
            }
          }
        }
      }
    }
    return true;
  };
  return one_way(l, r, [&](std::size_t x, std::size_t y) { return b[x][y]; }) &&
         one_way(r, l, [&](std::size_t y, std::size_t x) { return b[x][y]; });
}

/// Union of all bisimulations of the given kind (models must share agents, at most 16 pairs).
inline Matrix union_of_bisimulations(const Model& l, const Model& r, int kind) {
  const std::size_t n = l.size(), m = r.size();
  Matrix out(n, std::vector<bool>(m, false));
  for (std::uint32_t bits = 1; bits < (1u << (n * m)); ++bits) {
    Matrix b(n, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < n * m; ++i) b[i / m][i % m] = bits >> i & 1u;
    if (!is_bisimulation(l, r, b, kind)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) out[i][j] = out[i][j] || b[i][j];
    }
  }
  return out;
}

}  // namespace oracle
