#include "glal/bisim.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace glal {

const char* bisim_kind_name(BisimKind k) {
  switch (k) {
    case BisimKind::modal: return "modal";
    case BisimKind::plusminus: return "plusminus";
    case BisimKind::collective: return "collective";
  }
  return "?";
}

const char* condition_name(BisimFailure::Condition c) {
  switch (c) {
    case BisimFailure::Condition::Atoms: return "Atoms";
    case BisimFailure::Condition::Forth: return "Forth";
    case BisimFailure::Condition::Back: return "Back";
    case BisimFailure::Condition::Reach: return "Reach";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;
using Condition = BisimFailure::Condition;

// One model seen over the union of both models' agents and atoms.
struct Side {
  const KripkeModel* m;
  std::vector<std::vector<Mask>> prof;  // exact profile of every world pair
  std::vector<std::vector<bool>> val;   // valuation of every world over the shared atoms

  std::size_t size() const { return m->world_count(); }
  const std::string& name(WorldIndex w) const { return m->worlds()[w]; }
};

Side make_side(const KripkeModel& m, const std::vector<std::string>& agents, const std::vector<std::string>& atoms) {
  Side s{&m, {}, {}};
  const std::size_t n = m.world_count();
  s.prof.assign(n, std::vector<Mask>(n, 0));
  for (std::size_t i = 0; i < agents.size(); ++i) {
    auto a = m.agent_index(agents[i]);
    for (WorldIndex w = 0; w < n; ++w) {
      for (WorldIndex v = 0; v < n; ++v) {
        bool rel = a ? m.related(*a, w, v) : w == v;
        if (rel) s.prof[w][v] |= Mask{1} << i;
      }
    }
  }
  for (WorldIndex w = 0; w < n; ++w) {
    std::vector<bool> bits;
    for (const auto& p : atoms) bits.push_back(m.truth(p).test(w));
    s.val.push_back(std::move(bits));
  }
  return s;
}

std::vector<std::string> merged(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::string profile_text(Mask m, const std::vector<std::string>& agents) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!(m >> i & 1)) continue;
    if (!first) out += ",";
    out += agents[i];
    first = false;
  }
  return out + "}";
}

struct Pair {
  Side left;
  Side right;
  std::vector<std::string> agents;
  Mask all = 0;

  Pair(const KripkeModel& m, const KripkeModel& n) {
    agents = merged(m.agents(), n.agents());
    if (agents.size() > 64) throw BoundExceeded("bisimulation supports at most 64 agents");
    auto atoms = merged(m.atoms(), n.atoms());
    left = make_side(m, agents, atoms);
    right = make_side(n, agents, atoms);
    all = agents.size() == 64 ? ~Mask{0} : (Mask{1} << agents.size()) - 1;
  }
};

using Rel = std::vector<std::vector<char>>;

// First world v of `from` whose step from w has no matching step from w2 in
// `to`. `rel(v, v2)` reads the candidate relation in this orientation.
std::optional<std::string> forth_gap(const Side& from, const Side& to, WorldIndex w, WorldIndex w2, BisimKind kind,
                                     const std::function<bool(WorldIndex, WorldIndex)>& rel,
                                     const std::vector<std::string>& agents) {
  for (WorldIndex v = 0; v < from.size(); ++v) {
    Mask p = from.prof[w][v];
    if (kind == BisimKind::modal) {
      for (std::size_t a = 0; a < agents.size(); ++a) {
        if (!(p >> a & 1)) continue;
        bool ok = false;
        for (WorldIndex v2 = 0; v2 < to.size() && !ok; ++v2) ok = (to.prof[w2][v2] >> a & 1) && rel(v, v2);
        if (!ok) {
          return "'" + from.name(v) + "' is an " + agents[a] + "-successor of '" + from.name(w) +
                 "' with no related " + agents[a] + "-successor of '" + to.name(w2) + "'";
        }
      }
      continue;
    }
    if (kind == BisimKind::collective && p == 0) continue;
    bool ok = false;
    for (WorldIndex v2 = 0; v2 < to.size() && !ok; ++v2) {
      Mask q = to.prof[w2][v2];
      ok = (kind == BisimKind::plusminus ? q == p : (q & p) == p) && rel(v, v2);
    }
    if (!ok) {
      return "'" + from.name(v) + "' has profile " + profile_text(p, agents) + " from '" + from.name(w) +
             "' and no related world has it from '" + to.name(w2) + "'";
    }
  }
  return std::nullopt;
}

struct Verdict {
  Condition condition;
  std::string detail;
};

std::optional<Verdict> local_failure(const Pair& pr, WorldIndex w, WorldIndex w2, BisimKind kind, const Rel& r) {
  if (pr.left.val[w] != pr.right.val[w2]) {
    return Verdict{Condition::Atoms, "valuations of '" + pr.left.name(w) + "' and '" + pr.right.name(w2) + "' differ"};
  }
  auto fwd = [&](WorldIndex v, WorldIndex v2) { return r[v][v2] != 0; };
  auto bwd = [&](WorldIndex v2, WorldIndex v) { return r[v][v2] != 0; };
  if (auto gap = forth_gap(pr.left, pr.right, w, w2, kind, fwd, pr.agents)) return Verdict{Condition::Forth, *gap};
  if (auto gap = forth_gap(pr.right, pr.left, w2, w, kind, bwd, pr.agents)) return Verdict{Condition::Back, *gap};
  return std::nullopt;
}

// Greatest relation closed under Atoms, Forth and Back, where the step
// condition is per agent (modal), inclusive (collective) or exact (plusminus).
// `reasons`, when given, records why each pair was dropped.
Rel greatest_fixpoint(const Pair& pr, BisimKind kind,
                      std::map<std::pair<WorldIndex, WorldIndex>, Verdict>* reasons = nullptr) {
  const std::size_t n = pr.left.size(), m = pr.right.size();
  Rel r(n, std::vector<char>(m, 0));
  for (WorldIndex w = 0; w < n; ++w) {
    for (WorldIndex w2 = 0; w2 < m; ++w2) r[w][w2] = pr.left.val[w] == pr.right.val[w2];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (WorldIndex w = 0; w < n; ++w) {
      for (WorldIndex w2 = 0; w2 < m; ++w2) {
        if (!r[w][w2]) continue;
        if (auto v = local_failure(pr, w, w2, kind, r)) {
          if (reasons) reasons->emplace(std::make_pair(w, w2), *v);
          r[w][w2] = 0;
          changed = true;
        }
      }
    }
  }
  return r;
}

// Classes of worlds related by every agent, with the valuations they realize.
struct Classes {
  std::vector<std::size_t> of;     // class of each world
  std::vector<WorldIndex> rep;     // first member of each class
  std::vector<std::set<std::vector<bool>>> vals;
};

Classes agreement_classes(const Side& s, Mask all) {
  Classes c;
  c.of.assign(s.size(), SIZE_MAX);
  for (WorldIndex w = 0; w < s.size(); ++w) {
    if (c.of[w] != SIZE_MAX) continue;
    std::size_t id = c.rep.size();
    c.rep.push_back(w);
    c.vals.emplace_back();
    for (WorldIndex v = w; v < s.size(); ++v) {
      if (s.prof[w][v] == all) {
        c.of[v] = id;
        c.vals[id].insert(s.val[v]);
      }
    }
  }
  return c;
}

constexpr std::size_t kSearchBudget = 1000000;

// Calls `visit` with every profile-preserving class bijection (left class ->
// right class); `visit` returns false to stop. With `fixed`, the first class
// is forced onto the second.
void class_isomorphisms(const Pair& pr, const Classes& cl, const Classes& cr,
                        std::optional<std::pair<std::size_t, std::size_t>> fixed,
                        const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t k = cl.rep.size();
  if (k != cr.rep.size()) return;
  std::vector<std::size_t> order;
  if (fixed) order.push_back(fixed->first);
  for (std::size_t c = 0; c < k; ++c) {
    if (!fixed || c != fixed->first) order.push_back(c);
  }
  std::vector<std::size_t> phi(k, SIZE_MAX);
  std::vector<char> used(k, 0);
  std::size_t nodes = 0;
  bool stop = false;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (stop) return;
    if (++nodes > kSearchBudget) throw BoundExceeded("plus-minus bisimulation search exceeded its budget");
    if (i == k) {
      stop = !visit(phi);
      return;
    }
    std::size_t c = order[i];
    for (std::size_t d = 0; d < k && !stop; ++d) {
      if (used[d] || cl.vals[c] != cr.vals[d]) continue;
      if (i == 0 && fixed && d != fixed->second) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        std::size_t c2 = order[j];
        ok = pr.left.prof[cl.rep[c]][cl.rep[c2]] == pr.right.prof[cr.rep[d]][cr.rep[phi[c2]]];
      }
      if (!ok) continue;
      phi[c] = d;
      used[d] = 1;
      go(i + 1);
      used[d] = 0;
      phi[c] = SIZE_MAX;
    }
  };
  go(0);
}

// Worlds paired by a class bijection: same mapped class and same valuation.
void add_pairs(const Pair& pr, const Classes& cl, const Classes& cr, const std::vector<std::size_t>& phi, Rel& r) {
  for (WorldIndex w = 0; w < pr.left.size(); ++w) {
    for (WorldIndex w2 = 0; w2 < pr.right.size(); ++w2) {
      if (cr.of[w2] == phi[cl.of[w]] && pr.left.val[w] == pr.right.val[w2]) r[w][w2] = 1;
    }
  }
}

PairSet to_pairs(const Pair& pr, const Rel& r) {
  PairSet out;
  for (WorldIndex w = 0; w < pr.left.size(); ++w) {
    for (WorldIndex w2 = 0; w2 < pr.right.size(); ++w2) {
      if (r[w][w2]) out.emplace(pr.left.name(w), pr.right.name(w2));
    }
  }
  return out;
}

}  // namespace

PairSet max_bisim(const KripkeModel& m, const KripkeModel& n, BisimKind kind) {
  Pair pr(m, n);
  if (kind != BisimKind::plusminus) return to_pairs(pr, greatest_fixpoint(pr, kind));
  auto cl = agreement_classes(pr.left, pr.all);
  auto cr = agreement_classes(pr.right, pr.all);
  Rel r(pr.left.size(), std::vector<char>(pr.right.size(), 0));
  class_isomorphisms(pr, cl, cr, std::nullopt, [&](const std::vector<std::size_t>& phi) {
    add_pairs(pr, cl, cr, phi, r);
    return true;
  });
  return to_pairs(pr, r);
}

BisimResult pointed_bisim(const PointedModel& p, const PointedModel& q, BisimKind kind, bool total) {
  Pair pr(p.model, q.model);
  const WorldIndex w = p.point, w2 = q.point;
  const WorldPair point{p.point_name(), q.point_name()};
  BisimResult res;
  std::map<std::pair<WorldIndex, WorldIndex>, Verdict> reasons;
  Rel gfp = greatest_fixpoint(pr, kind, &reasons);

  auto fail = [&](Condition c, std::string detail) {
    res.related = false;
    res.witness.clear();
    res.failure = BisimFailure{point, c, std::move(detail)};
    return res;
  };

  if (!gfp[w][w2]) {
    if (pr.left.val[w] != pr.right.val[w2]) {
      return fail(Condition::Atoms, "valuations of '" + point.first + "' and '" + point.second + "' differ");
    }
    const auto& v = reasons.at({w, w2});
    return fail(v.condition, v.detail);
  }

  Rel witness = gfp;
  if (kind == BisimKind::plusminus) {
    auto cl = agreement_classes(pr.left, pr.all);
    auto cr = agreement_classes(pr.right, pr.all);
    std::optional<std::vector<std::size_t>> found;
    class_isomorphisms(pr, cl, cr, std::make_pair(cl.of[w], cr.of[w2]), [&](const std::vector<std::size_t>& phi) {
      found = phi;
      return false;
    });
    if (!found) {
      std::string detail = "no plus-minus bisimulation contains the pair";
      for (WorldIndex v = 0; v < pr.left.size(); ++v) {
        for (WorldIndex v2 = 0; v2 < pr.right.size(); ++v2) {
          if (gfp[v][v2] && pr.left.prof[w][v] != pr.right.prof[w2][v2]) {
            return fail(Condition::Reach,
                        "('" + pr.left.name(v) + "', '" + pr.right.name(v2) + "') cannot be related: profile " +
                            profile_text(pr.left.prof[w][v], pr.agents) + " from '" + point.first + "' vs " +
                            profile_text(pr.right.prof[w2][v2], pr.agents) + " from '" + point.second + "'");
          }
        }
      }
      return fail(Condition::Reach, detail);
    }
    witness.assign(pr.left.size(), std::vector<char>(pr.right.size(), 0));
    add_pairs(pr, cl, cr, *found, witness);
  }

  if (total) {
    for (WorldIndex v = 0; v < pr.left.size(); ++v) {
      if (std::none_of(witness[v].begin(), witness[v].end(), [](char c) { return c != 0; })) {
        return fail(Condition::Forth, "left world '" + pr.left.name(v) + "' is bisimilar to no right world");
      }
    }
    for (WorldIndex v2 = 0; v2 < pr.right.size(); ++v2) {
      bool any = false;
      for (WorldIndex v = 0; v < pr.left.size() && !any; ++v) any = witness[v][v2] != 0;
      if (!any) return fail(Condition::Back, "right world '" + pr.right.name(v2) + "' is bisimilar to no left world");
    }
  }
  res.related = true;
  res.witness = to_pairs(pr, witness);
  return res;
}

std::vector<BisimFailure> check_relation(const KripkeModel& m, const KripkeModel& n, const PairSet& relation,
                                         BisimKind kind) {
  Pair pr(m, n);
  Rel r(pr.left.size(), std::vector<char>(pr.right.size(), 0));
  std::vector<std::pair<WorldIndex, WorldIndex>> pairs;
  for (const auto& [a, b] : relation) {
    auto w = m.require_world(a);
    auto w2 = n.require_world(b);
    r[w][w2] = 1;
    pairs.emplace_back(w, w2);
  }
  std::vector<BisimFailure> out;
  for (auto [w, w2] : pairs) {
    WorldPair named{pr.left.name(w), pr.right.name(w2)};
    if (auto v = local_failure(pr, w, w2, kind, r)) out.push_back({named, v->condition, v->detail});
    if (kind != BisimKind::plusminus) continue;
    for (auto [v, v2] : pairs) {
      if (pr.left.prof[w][v] != pr.right.prof[w2][v2]) {
        out.push_back({named, Condition::Reach,
                       "related pair ('" + pr.left.name(v) + "', '" + pr.right.name(v2) + "') has profile " +
                           profile_text(pr.left.prof[w][v], pr.agents) + " on the left and " +
                           profile_text(pr.right.prof[w2][v2], pr.agents) + " on the right"});
        break;
      }
    }
  }
  return out;
}

}  // namespace glal
