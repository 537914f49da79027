// Distinguishing-formula search.
//
// Formulas are enumerated by depth and kept only if their meaning is new,
// where the meaning of a formula is its truth set in every model reachable
// from either input by any sequence of local or global refinements (by any
// world set, for any coalition). Two formulas with equal meaning are
// interchangeable everywhere in a larger formula, so dropping the later one
// loses nothing.

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "glal/bisim.hpp"

namespace glal {

namespace {

using Bits = std::uint8_t;  // world set of a model with at most 6 worlds
constexpr std::size_t kMaxWorlds = 6;
constexpr std::size_t kMaxModels = 20000;
constexpr std::size_t kMaxFormulas = 200000;

struct Small {
  std::size_t side;
  std::vector<std::vector<Bits>> cells;  // cells[a][w] = R_a(w)
};

// An announcement operator: coalition mask and whether it is global.
struct AnnOp {
  unsigned group;
  bool global;
};

class Closure {
 public:
  Closure(const std::vector<const KripkeModel*>& roots, const std::vector<std::string>& agents,
          std::vector<AnnOp> ops)
      : agents_(agents), ops_(std::move(ops)) {
    for (std::size_t s = 0; s < roots.size(); ++s) {
      const auto& m = *roots[s];
      sizes_.push_back(m.world_count());
      Small sm{s, {}};
      for (const auto& a : agents) {
        std::vector<Bits> row(m.world_count(), 0);
        auto ai = m.agent_index(a);
        for (WorldIndex w = 0; w < m.world_count(); ++w) {
          if (!ai) {
            row[w] = Bits(1u << w);
            continue;
          }
          const auto& c = m.cell(*ai, w);
          for (WorldIndex v = 0; v < m.world_count(); ++v) {
            if (c.test(v)) row[w] |= Bits(1u << v);
          }
        }
        sm.cells.push_back(std::move(row));
      }
      root_ids_.push_back(intern(std::move(sm)));
    }
    while (!pending_.empty()) {
      auto id = pending_.front();
      pending_.pop_front();
      expand(id);
    }
  }

  std::size_t size() const { return models_.size(); }
  std::size_t root(std::size_t side) const { return root_ids_[side]; }
  const Small& model(std::size_t id) const { return models_[id]; }
  std::size_t worlds(std::size_t id) const { return sizes_[models_[id].side]; }
  Bits full(std::size_t id) const { return Bits((1u << worlds(id)) - 1); }
  const std::vector<AnnOp>& ops() const { return ops_; }

  /// Model after announcing X at w with operator `op` (requires w in X).
  std::size_t next(std::size_t id, std::size_t op, std::size_t w, Bits x) const {
    std::size_t n = worlds(id);
    return trans_[id][(op * n + w) << n | x];
  }

  Bits closure_of(std::size_t id, unsigned group, std::size_t w) const {
    const auto& m = models_[id];
    Bits reach = Bits(1u << w);
    for (Bits prev = 0; prev != reach;) {
      prev = reach;
      for (std::size_t v = 0; v < worlds(id); ++v) {
        if (!(reach >> v & 1)) continue;
        for (std::size_t a = 0; a < agents_.size(); ++a) {
          if (group >> a & 1) reach |= m.cells[a][v];
        }
      }
    }
    return reach;
  }

 private:
  std::size_t intern(Small sm) {
    auto key = std::make_pair(sm.side, sm.cells);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    if (models_.size() >= kMaxModels) throw BoundExceeded("too many refined models to search for a distinguishing formula");
    std::size_t id = models_.size();
    index_.emplace(std::move(key), id);
    models_.push_back(std::move(sm));
    trans_.emplace_back();
    pending_.push_back(id);
    return id;
  }

  void expand(std::size_t id) {
    const std::size_t n = worlds(id);
    std::vector<std::size_t> table(ops_.size() * n << n, SIZE_MAX);
    for (std::size_t op = 0; op < ops_.size(); ++op) {
      for (std::size_t w = 0; w < n; ++w) {
        for (unsigned x = 0; x < (1u << n); ++x) {
          if (!(x >> w & 1)) continue;
          Small sm = models_[id];
          Bits glob = ops_[op].global ? closure_of(id, ops_[op].group, w) : 0;
          for (std::size_t a = 0; a < agents_.size(); ++a) {
            if (!(ops_[op].group >> a & 1)) continue;
            Bits scope = ops_[op].global ? glob : models_[id].cells[a][w];
            for (std::size_t v = 0; v < n; ++v) {
              if (!(scope >> v & 1)) continue;
              sm.cells[a][v] &= (x >> v & 1) ? Bits(x) : Bits(~x);
            }
          }
          table[(op * n + w) << n | x] = intern(std::move(sm));
        }
      }
    }
    trans_[id] = std::move(table);
  }

  std::vector<std::string> agents_;
  std::vector<AnnOp> ops_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> root_ids_;
  std::vector<Small> models_;
  std::vector<std::vector<std::size_t>> trans_;
  std::map<std::pair<std::size_t, std::vector<std::vector<Bits>>>, std::size_t> index_;
  std::deque<std::size_t> pending_;
};

using Sig = std::string;  // one byte per closure model

struct Candidate {
  Formula f;
  Sig sig;
};

}  // namespace

std::optional<Formula> distinguishing_formula_search(const PointedModel& p, const PointedModel& q, int depth) {
  if (p.model.world_count() > kMaxWorlds || q.model.world_count() > kMaxWorlds) {
    throw BoundExceeded("distinguishing-formula search supports models of at most 6 worlds");
  }
  auto agents = p.model.agents();
  for (const auto& a : q.model.agents()) agents.push_back(a);
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  if (agents.size() > 4) throw BoundExceeded("distinguishing-formula search supports at most 4 agents");
  auto atoms = p.model.atoms();
  for (const auto& a : q.model.atoms()) atoms.push_back(a);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  const unsigned k = static_cast<unsigned>(agents.size());
  std::vector<unsigned> groups;  // coalitions of two or more agents
  for (unsigned g = 1; g < (1u << k); ++g) {
    if (__builtin_popcount(g) >= 2) groups.push_back(g);
  }
  std::vector<AnnOp> ops;
  for (unsigned a = 0; a < k; ++a) ops.push_back({1u << a, false});
  for (auto g : groups) {
    ops.push_back({g, false});
    ops.push_back({g, true});
  }
  auto coalition = [&](unsigned g) {
    std::vector<std::string> names;
    for (unsigned a = 0; a < k; ++a) {
      if (g >> a & 1) names.push_back(agents[a]);
    }
    return Coalition(names);
  };

  Closure cl({&p.model, &q.model}, agents, ops);
  const std::size_t S = cl.size();
  const std::size_t pid = cl.root(0), qid = cl.root(1);

  std::vector<Candidate> kept;
  std::vector<std::size_t> depth_of;
  std::unordered_set<Sig> seen;
  std::vector<std::vector<std::size_t>> level(static_cast<std::size_t>(std::max(depth, 0)) + 1);

  // Returns true when f distinguishes p from q.
  auto offer = [&](Formula f, Sig sig, std::size_t d) {
    if (!seen.insert(sig).second) return false;
    if (kept.size() >= kMaxFormulas) throw BoundExceeded("distinguishing-formula search exceeded its formula budget");
    bool hit = (Bits(sig[pid]) >> p.point & 1) && !(Bits(sig[qid]) >> q.point & 1);
    level[d].push_back(kept.size());
    depth_of.push_back(d);
    kept.push_back({std::move(f), std::move(sig)});
    return hit;
  };

  auto map1 = [&](const Sig& s, auto&& fn) {
    Sig out(S, 0);
    for (std::size_t i = 0; i < S; ++i) out[i] = char(fn(i, Bits(s[i])));
    return out;
  };
  auto knows = [&](std::size_t i, std::size_t a, Bits s, bool whether) {
    Bits out = 0;
    for (std::size_t w = 0; w < cl.worlds(i); ++w) {
      Bits c = cl.model(i).cells[a][w];
      if ((c & ~s) == 0 || (whether && (c & s) == 0)) out |= Bits(1u << w);
    }
    return out;
  };

  if (depth < 1) return std::nullopt;
  for (const auto& name : atoms) {
    Sig s(S, 0);
    for (std::size_t i = 0; i < S; ++i) {
      const auto& m = cl.model(i).side == 0 ? p.model : q.model;
      auto t = m.truth(name);
      Bits b = 0;
      for (std::size_t w = 0; w < cl.worlds(i); ++w) {
        if (t.test(w)) b |= Bits(1u << w);
      }
      s[i] = char(b);
    }
    if (offer(atom(name), std::move(s), 1)) return kept.back().f;
  }
  if (offer(top(), map1(Sig(S, 0), [&](std::size_t i, Bits) { return cl.full(i); }), 1)) return kept.back().f;
  if (offer(bot(), Sig(S, 0), 1)) return kept.back().f;

  for (std::size_t d = 2; d <= static_cast<std::size_t>(depth); ++d) {
    const auto prev = level[d - 1];
    for (auto idx : prev) {
      Formula f = kept[idx].f;
      Sig s = kept[idx].sig;
      if (offer(neg(f), map1(s, [&](std::size_t i, Bits b) { return Bits(~b & cl.full(i)); }), d)) {
        return kept.back().f;
      }
      for (unsigned a = 0; a < k; ++a) {
        if (offer(know(agents[a], f), map1(s, [&](std::size_t i, Bits b) { return knows(i, a, b, false); }), d)) {
          return kept.back().f;
        }
        if (offer(know_whether(agents[a], f), map1(s, [&](std::size_t i, Bits b) { return knows(i, a, b, true); }),
                  d)) {
          return kept.back().f;
        }
      }
      for (auto g : groups) {
        auto sig = map1(s, [&](std::size_t i, Bits b) {
          Bits out = 0;
          for (std::size_t w = 0; w < cl.worlds(i); ++w) {
            if ((cl.closure_of(i, g, w) & ~b) == 0) out |= Bits(1u << w);
          }
          return out;
        });
        if (offer(common(coalition(g), f), std::move(sig), d)) return kept.back().f;
      }
    }
    // Pairs of earlier formulas with at least one at depth d - 1.
    const std::size_t limit = kept.size();
    auto pairs = [&](auto&& body) -> bool {
      for (std::size_t x = 0; x < limit; ++x) {
        if (depth_of[x] >= d) continue;
        for (std::size_t y = 0; y < limit; ++y) {
          if (depth_of[y] >= d) continue;
          if (depth_of[x] != d - 1 && depth_of[y] != d - 1) continue;
          if (body(x, y)) return true;
        }
      }
      return false;
    };
    bool found = pairs([&](std::size_t x, std::size_t y) {
      const Sig xs = kept[x].sig, ys = kept[y].sig;
      for (std::size_t op = 0; op < ops.size(); ++op) {
        Sig out(S, 0);
        for (std::size_t i = 0; i < S; ++i) {
          Bits xb = Bits(xs[i]), b = 0;
          for (std::size_t w = 0; w < cl.worlds(i); ++w) {
            if (!(xb >> w & 1)) {
              b |= Bits(1u << w);
            } else if (Bits(ys[cl.next(i, op, w, xb)]) >> w & 1) {
              b |= Bits(1u << w);
            }
          }
          out[i] = char(b);
        }
        Coalition c = coalition(ops[op].group);
        Formula f = ops[op].global ? ann_global(kept[x].f, c, kept[y].f) : ann_local(kept[x].f, c, kept[y].f);
        if (offer(std::move(f), std::move(out), d)) return true;
      }
      return false;
    });
    if (found) return kept.back().f;
    found = pairs([&](std::size_t x, std::size_t y) {
      if (y <= x) return false;
      Formula fx = kept[x].f, fy = kept[y].f;
      Sig xs = kept[x].sig, ys = kept[y].sig;
      Sig a(S, 0), o(S, 0);
      for (std::size_t i = 0; i < S; ++i) {
        a[i] = char(Bits(xs[i]) & Bits(ys[i]));
        o[i] = char(Bits(xs[i]) | Bits(ys[i]));
      }
      return offer(conj(fx, fy), std::move(a), d) || offer(disj(fx, fy), std::move(o), d);
    });
    if (found) return kept.back().f;
  }
  return std::nullopt;
}

}  // namespace glal
