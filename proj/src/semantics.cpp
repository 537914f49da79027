#include "glal/semantics.hpp"

#include <algorithm>
#include <unordered_map>

#include "glal/model_io.hpp"

namespace glal {

const char* refinement_kind_name(RefinementKind k) {
  switch (k) {
    case RefinementKind::local: return "local";
    case RefinementKind::global: return "global";
    case RefinementKind::pal: return "public";
    case RefinementKind::semiprivate: return "semiprivate";
  }
  return "?";
}

namespace {

std::vector<AgentIndex> all_agents(const KripkeModel& m) {
  std::vector<AgentIndex> out(m.agent_count());
  for (AgentIndex a = 0; a < out.size(); ++a) out[a] = a;
  return out;
}

// Members of the closure class of w, given component labels.
WorldSet class_of(const std::vector<std::uint32_t>& comp, WorldIndex w) {
  WorldSet out(comp.size());
  for (WorldIndex v = 0; v < comp.size(); ++v) {
    if (comp[v] == comp[w]) out.set(v);
  }
  return out;
}

template <typename F>
void for_each_bit(const WorldSet& s, F&& f) {
  for (auto i = s.find_first(); i != WorldSet::npos; i = s.find_next(i)) f(static_cast<WorldIndex>(i));
}

}  // namespace

WorldSet refinement_scope(const KripkeModel& m, WorldIndex w, AgentIndex a,
                          const std::vector<AgentIndex>& group, RefinementKind kind) {
  switch (kind) {
    case RefinementKind::local: return m.cell(a, w);
    case RefinementKind::global: return common_closure(m, group, w);
    case RefinementKind::semiprivate: return common_closure(m, all_agents(m), w);
    case RefinementKind::pal: return m.every();
  }
  return m.none();
}

std::vector<std::vector<WorldSet>> refined_neighborhoods(const KripkeModel& m, WorldIndex w,
                                                         const WorldSet& truth,
                                                         const std::vector<AgentIndex>& group,
                                                         RefinementKind kind) {
  const WorldSet falsity = ~truth;
  std::vector<std::vector<WorldSet>> out(m.agent_count());
  std::optional<WorldSet> shared_scope;
  if (kind != RefinementKind::local && !group.empty()) shared_scope = refinement_scope(m, w, group[0], group, kind);
  for (AgentIndex a = 0; a < m.agent_count(); ++a) {
    auto& nb = out[a];
    nb.reserve(m.world_count());
    for (WorldIndex v = 0; v < m.world_count(); ++v) nb.push_back(m.cell(a, v));
    if (!std::binary_search(group.begin(), group.end(), a)) continue;
    WorldSet scope = shared_scope ? *shared_scope : refinement_scope(m, w, a, group, kind);
    for_each_bit(scope, [&](WorldIndex v) { nb[v] &= truth.test(v) ? truth : falsity; });
  }
  return out;
}

ModelDraft refinement_draft(const KripkeModel& m, WorldIndex w, const WorldSet& truth,
                            const std::vector<AgentIndex>& group, RefinementKind kind) {
  auto nbs = refined_neighborhoods(m, w, truth, group, kind);
  ModelDraft d;
  d.worlds = m.worlds();
  d.agents = m.agents();
  for (AgentIndex a = 0; a < m.agent_count(); ++a) {
    auto& pairs = d.relations[m.agents()[a]];
    for (WorldIndex v = 0; v < m.world_count(); ++v) {
      for_each_bit(nbs[a][v], [&](WorldIndex u) { pairs.emplace_back(m.worlds()[v], m.worlds()[u]); });
    }
  }
  for (const auto& [p, set] : m.valuation()) d.valuation[p] = world_list(m, set);
  return d;
}

KripkeModel refine_with(const KripkeModel& m, WorldIndex w, const WorldSet& truth,
                        const std::vector<AgentIndex>& group, RefinementKind kind) {
  if (kind == RefinementKind::pal) throw InvariantBreach("refine_with called for a public announcement");
  auto nbs = refined_neighborhoods(m, w, truth, group, kind);
  std::vector<std::vector<std::uint32_t>> labels(m.agent_count());
  for (AgentIndex a = 0; a < m.agent_count(); ++a) {
    auto& lab = labels[a];
    if (!std::binary_search(group.begin(), group.end(), a)) {
      lab = m.labels(a);
      continue;
    }
    const auto& nb = nbs[a];
    lab.resize(m.world_count());
    for (WorldIndex v = 0; v < m.world_count(); ++v) {
      if (!nb[v].test(v)) {
        throw InvariantBreach("refinement is not reflexive at '" + m.worlds()[v] + "' for agent '" +
                              m.agents()[a] + "'");
      }
      for_each_bit(nb[v], [&](WorldIndex u) {
        if (nb[u] != nb[v]) {
          throw InvariantBreach("refinement is not an equivalence for agent '" + m.agents()[a] + "' at ('" +
                                m.worlds()[v] + "', '" + m.worlds()[u] + "')");
        }
      });
      lab[v] = static_cast<std::uint32_t>(nb[v].find_first());
    }
  }
  return KripkeModel(m.worlds(), m.agents(), labels, m.valuation());
}

std::pair<KripkeModel, std::vector<WorldIndex>> restrict_to(const KripkeModel& m, const WorldSet& truth) {
  if (truth.none()) throw EmptyResult();
  std::vector<WorldIndex> origin;
  for_each_bit(truth, [&](WorldIndex v) { origin.push_back(v); });
  std::vector<std::string> worlds;
  for (auto v : origin) worlds.push_back(m.worlds()[v]);
  std::vector<std::vector<std::uint32_t>> labels(m.agent_count());
  for (AgentIndex a = 0; a < m.agent_count(); ++a) {
    for (auto v : origin) labels[a].push_back(m.label(a, v));
  }
  std::map<std::string, WorldSet> val;
  for (const auto& [p, set] : m.valuation()) {
    WorldSet s(origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) s[i] = set.test(origin[i]);
    val[p] = s;
  }
  return {KripkeModel(std::move(worlds), m.agents(), labels, std::move(val)), std::move(origin)};
}

// ---------------------------------------------------------------------------

namespace {

struct Partial {
  WorldSet known;
  WorldSet value;
};

struct Context {
  std::shared_ptr<const KripkeModel> model;
  std::optional<RefinementKey> key;
  std::vector<std::size_t> children;
  std::vector<WorldIndex> origin;  // public announcements: parent index of each world
  std::unordered_map<Formula, Partial, FormulaHash> memo;
  std::map<std::vector<AgentIndex>, std::vector<std::uint32_t>> closures;
};

struct CacheKey {
  std::size_t parent;
  RefinementKind kind;
  std::vector<AgentIndex> group;
  Formula announced;
  std::vector<std::uint32_t> signature;

  bool operator==(const CacheKey&) const = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const {
    std::size_t h = k.parent * 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(k.kind);
    auto mix = [&](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (auto a : k.group) mix(a);
    mix(k.announced.hash());
    for (auto s : k.signature) mix(s);
    return h;
  }
};

}  // namespace

struct Evaluator::Impl {
  EvalOptions options;
  std::vector<std::unique_ptr<Context>> contexts;
  std::unordered_map<CacheKey, std::size_t, CacheKeyHash> cache;
  std::size_t built = 0;

  std::size_t root(const KripkeModel& m) {
    contexts.clear();
    cache.clear();
    auto c = std::make_unique<Context>();
    c->model = std::make_shared<const KripkeModel>(m);
    contexts.push_back(std::move(c));
    return 0;
  }

  const KripkeModel& model(std::size_t ctx) const { return *contexts[ctx]->model; }

  const std::vector<std::uint32_t>& closure(std::size_t ctx, const std::vector<AgentIndex>& group) {
    auto& cl = contexts[ctx]->closures;
    auto it = cl.find(group);
    if (it == cl.end()) it = cl.emplace(group, closure_labels(model(ctx), group)).first;
    return it->second;
  }

  WorldSet eval(std::size_t ctx, const Formula& f, const WorldSet& demand) {
    if (demand.none()) return demand;
    WorldSet missing = demand;
    {
      auto& memo = contexts[ctx]->memo;
      auto it = memo.find(f);
      if (it != memo.end()) {
        missing -= it->second.known;
        if (missing.none()) return it->second.value & demand;
      }
    }
    WorldSet computed = compute(ctx, f, missing) & missing;
    auto& memo = contexts[ctx]->memo;
    auto [it, fresh] = memo.try_emplace(f, Partial{missing, computed});
    if (!fresh) {
      it->second.known |= missing;
      it->second.value |= computed;
    }
    return it->second.value & demand;
  }

  // Truth of box_a g on `demand` for one agent.
  WorldSet knows(std::size_t ctx, AgentIndex a, const Formula& g, const WorldSet& demand, bool diamond) {
    const auto& m = model(ctx);
    WorldSet need = m.none();
    std::vector<char> seen(m.cells(a).size(), 0);
    for_each_bit(demand, [&](WorldIndex w) {
      auto l = m.label(a, w);
      if (!seen[l]) {
        seen[l] = 1;
        need |= m.cells(a)[l];
      }
    });
    WorldSet G = eval(ctx, g, need);
    WorldSet out = m.none();
    std::vector<char> good(seen.size(), 0);
    for (std::size_t l = 0; l < seen.size(); ++l) {
      if (!seen[l]) continue;
      const auto& c = m.cells(a)[l];
      good[l] = diamond ? c.intersects(G) : c.is_subset_of(G);
    }
    for_each_bit(demand, [&](WorldIndex w) {
      if (good[m.label(a, w)]) out.set(w);
    });
    return out;
  }

  std::size_t child(std::size_t ctx, RefinementKind kind, const std::vector<AgentIndex>& group,
                    const Formula& psi, const WorldSet& truth, WorldIndex w) {
    const auto& m = model(ctx);
    std::vector<std::uint32_t> sig;
    WorldSet scope = m.none();
    if (kind == RefinementKind::local) {
      for (auto a : group) {
        sig.push_back(m.label(a, w));
        scope |= m.cell(a, w);
      }
    } else {
      const auto& comp = closure(ctx, group);
      sig.push_back(comp[w]);
      scope = class_of(comp, w);
    }
    CacheKey ck{ctx, kind, group, psi, sig};
    if (options.cache_refinements) {
      auto it = cache.find(ck);
      if (it != cache.end()) return it->second;
    }
    auto c = std::make_unique<Context>();
    c->model = std::make_shared<const KripkeModel>(refine_with(m, w, truth, group, kind));
    std::vector<std::string> names;
    for (auto a : group) names.push_back(m.agents()[a]);
    c->key = RefinementKey{kind, std::move(names), psi, std::move(sig), std::move(scope)};
    ++built;
    std::size_t id = contexts.size();
    contexts.push_back(std::move(c));
    contexts[ctx]->children.push_back(id);
    if (options.cache_refinements) cache.emplace(std::move(ck), id);
    return id;
  }

  WorldSet announce(std::size_t ctx, const Formula& f, const WorldSet& demand, RefinementKind kind, bool diamond) {
    const auto& m = model(ctx);
    const Formula& psi = f.announced();
    const Formula& chi = f.body();
    auto group = m.require_agents(f.coalition());
    if (group.empty()) {
      WorldSet truth = eval(ctx, psi, demand);
      WorldSet inner = eval(ctx, chi, truth);
      return diamond ? inner : (demand - truth) | inner;
    }
    WorldSet need = demand;
    if (kind == RefinementKind::local) {
      for (auto a : group) {
        std::vector<char> seen(m.cells(a).size(), 0);
        for_each_bit(demand, [&](WorldIndex w) {
          auto l = m.label(a, w);
          if (!seen[l]) {
            seen[l] = 1;
            need |= m.cells(a)[l];
          }
        });
      }
    } else {
      const auto& comp = closure(ctx, group);
      std::vector<char> seen(m.world_count(), 0);
      for_each_bit(demand, [&](WorldIndex w) { seen[comp[w]] = 1; });
      for (WorldIndex v = 0; v < m.world_count(); ++v) {
        if (seen[comp[v]]) need.set(v);
      }
    }
    WorldSet truth = eval(ctx, psi, need);
    WorldSet active = demand & truth;
    // Group the demanded worlds by the refined model they evaluate in.
    std::vector<std::pair<std::size_t, WorldSet>> jobs;
    std::unordered_map<std::size_t, std::size_t> slot;
    for_each_bit(active, [&](WorldIndex w) {
      auto id = child(ctx, kind, group, psi, truth, w);
      auto [it, fresh] = slot.try_emplace(id, jobs.size());
      if (fresh) jobs.emplace_back(id, model(ctx).none());
      jobs[it->second].second.set(w);
    });
    WorldSet out = diamond ? model(ctx).none() : demand - truth;
    for (const auto& [id, worlds] : jobs) out |= eval(id, chi, worlds);
    return out;
  }

  WorldSet public_announce(std::size_t ctx, const Formula& f, const WorldSet& demand) {
    const Formula& psi = f.announced();
    WorldSet truth = eval(ctx, psi, model(ctx).every());
    WorldSet active = demand & truth;
    WorldSet out = demand - truth;
    if (active.none()) return out;
    CacheKey ck{ctx, RefinementKind::pal, {}, psi, {}};
    std::size_t id;
    auto it = options.cache_refinements ? cache.find(ck) : cache.end();
    if (it != cache.end()) {
      id = it->second;
    } else {
      auto [sub, origin] = restrict_to(model(ctx), truth);
      auto c = std::make_unique<Context>();
      c->model = std::make_shared<const KripkeModel>(std::move(sub));
      c->origin = std::move(origin);
      c->key = RefinementKey{RefinementKind::pal, {}, psi, {}, truth};
      ++built;
      id = contexts.size();
      contexts.push_back(std::move(c));
      contexts[ctx]->children.push_back(id);
      if (options.cache_refinements) cache.emplace(std::move(ck), id);
    }
    const auto& origin = contexts[id]->origin;
    WorldSet sub_demand(origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) sub_demand[i] = active.test(origin[i]);
    WorldSet inner = eval(id, f.body(), sub_demand);
    for_each_bit(inner, [&](WorldIndex i) { out.set(contexts[id]->origin[i]); });
    return out;
  }

  WorldSet compute(std::size_t ctx, const Formula& f, const WorldSet& demand) {
    const auto& m = model(ctx);
    switch (f.kind()) {
      case Kind::Atom: return m.truth(f.name()) & demand;
      case Kind::Top: return demand;
      case Kind::Bot: return m.none();
      case Kind::Not: return demand - eval(ctx, f.operand(), demand);
      case Kind::And: {
        WorldSet l = eval(ctx, f.lhs(), demand);
        return eval(ctx, f.rhs(), l);
      }
      case Kind::Or: {
        WorldSet l = eval(ctx, f.lhs(), demand);
        return l | eval(ctx, f.rhs(), demand - l);
      }
      case Kind::Implies: {
        WorldSet l = eval(ctx, f.lhs(), demand);
        return (demand - l) | eval(ctx, f.rhs(), l);
      }
      case Kind::Iff: {
        WorldSet l = eval(ctx, f.lhs(), demand);
        WorldSet r = eval(ctx, f.rhs(), demand);
        return demand - (l ^ r);
      }
      case Kind::Know: return knows(ctx, m.require_agent(f.agent()), f.operand(), demand, false);
      case Kind::Dual: return knows(ctx, m.require_agent(f.agent()), f.operand(), demand, true);
      case Kind::KnowWhether: {
        AgentIndex a = m.require_agent(f.agent());
        WorldSet yes = knows(ctx, a, f.operand(), demand, false);
        return yes | knows(ctx, a, neg(f.operand()), demand - yes, false);
      }
      case Kind::Everybody: {
        WorldSet out = demand;
        for (auto a : m.require_agents(f.coalition())) out = knows(ctx, a, f.operand(), out, false);
        return out;
      }
      case Kind::Common: {
        auto group = m.require_agents(f.coalition());
        if (group.empty()) return eval(ctx, f.operand(), demand);
        const auto& comp = closure(ctx, group);
        std::vector<char> seen(m.world_count(), 0);
        for_each_bit(demand, [&](WorldIndex w) { seen[comp[w]] = 1; });
        WorldSet need = m.none();
        for (WorldIndex v = 0; v < m.world_count(); ++v) {
          if (seen[comp[v]]) need.set(v);
        }
        WorldSet bad = need - eval(ctx, f.operand(), need);
        std::vector<char> broken(m.world_count(), 0);
        for_each_bit(bad, [&](WorldIndex v) { broken[comp[v]] = 1; });
        WorldSet out = m.none();
        for_each_bit(demand, [&](WorldIndex w) {
          if (!broken[comp[w]]) out.set(w);
        });
        return out;
      }
      case Kind::Distributed: {
        auto group = m.require_agents(f.coalition());
        std::vector<WorldSet> cells;
        WorldSet need = m.none();
        for_each_bit(demand, [&](WorldIndex w) {
          cells.push_back(intersection_cell(m, group, w));
          need |= cells.back();
        });
        WorldSet G = eval(ctx, f.operand(), need);
        WorldSet out = m.none();
        std::size_t i = 0;
        for_each_bit(demand, [&](WorldIndex w) {
          if (cells[i++].is_subset_of(G)) out.set(w);
        });
        return out;
      }
      case Kind::AnnLocal: return announce(ctx, f, demand, RefinementKind::local, false);
      case Kind::AnnGlobal: return announce(ctx, f, demand, RefinementKind::global, false);
      case Kind::DiaLocal: return announce(ctx, f, demand, RefinementKind::local, true);
      case Kind::DiaGlobal: return announce(ctx, f, demand, RefinementKind::global, true);
      case Kind::PalAnn: return public_announce(ctx, f, demand);
    }
    throw InvariantBreach("unhandled formula kind");
  }

  TraceNode trace(std::size_t ctx) const {
    TraceNode n;
    n.key = contexts[ctx]->key;
    n.model = contexts[ctx]->model;
    for (auto c : contexts[ctx]->children) n.children.push_back(trace(c));
    return n;
  }
};

Evaluator::Evaluator(EvalOptions options) : impl_(std::make_unique<Impl>()) { impl_->options = options; }
Evaluator::~Evaluator() = default;

WorldSet Evaluator::sat_set(const KripkeModel& m, const Formula& f) {
  auto ctx = impl_->root(m);
  return impl_->eval(ctx, f, m.every());
}

bool Evaluator::check(const PointedModel& p, const Formula& f) {
  auto ctx = impl_->root(p.model);
  WorldSet d = p.model.none();
  d.set(p.point);
  return impl_->eval(ctx, f, d).test(p.point);
}

std::pair<bool, EvalTrace> Evaluator::check_traced(const PointedModel& p, const Formula& f) {
  bool v = check(p, f);
  return {v, EvalTrace{p.point_name(), impl_->trace(0)}};
}

std::size_t Evaluator::refinements_built() const { return impl_->built; }

WorldSet sat_set(const KripkeModel& m, const Formula& f) { return Evaluator().sat_set(m, f); }
bool check(const PointedModel& p, const Formula& f) { return Evaluator().check(p, f); }

namespace {

nlohmann::json node_json(const TraceNode& n) {
  nlohmann::json j;
  if (n.key) {
    j["key"] = {{"kind", refinement_kind_name(n.key->kind)},
                {"coalition", n.key->coalition},
                {"announced", print(n.key->announced)},
                {"scope", world_list(*n.model, n.key->kind == RefinementKind::pal ? n.model->every() : n.key->scope)}};
  }
  j["model"] = model_to_json(*n.model);
  j["children"] = nlohmann::json::array();
  for (const auto& c : n.children) j["children"].push_back(node_json(c));
  return j;
}

KripkeModel refine_named(const KripkeModel& m, const std::string& w, const Formula& psi, const Coalition& group,
                         RefinementKind kind) {
  WorldIndex wi = m.require_world(w);
  auto agents = m.require_agents(group);
  return refine_with(m, wi, sat_set(m, psi), agents, kind);
}

}  // namespace

nlohmann::json trace_to_json(const EvalTrace& trace) {
  auto j = node_json(trace.root);
  j["point"] = trace.point;
  return j;
}

KripkeModel refine_local(const KripkeModel& m, const std::string& w, const Formula& psi, const Coalition& group) {
  return refine_named(m, w, psi, group, RefinementKind::local);
}
KripkeModel refine_global(const KripkeModel& m, const std::string& w, const Formula& psi, const Coalition& group) {
  return refine_named(m, w, psi, group, RefinementKind::global);
}
KripkeModel refine_semiprivate(const KripkeModel& m, const std::string& w, const Formula& psi,
                               const Coalition& group) {
  return refine_named(m, w, psi, group, RefinementKind::semiprivate);
}
KripkeModel refine_pal(const KripkeModel& m, const Formula& psi) { return restrict_to(m, sat_set(m, psi)).first; }

std::pair<bool, bool> check_pal_equiv(const PointedModel& p, const Formula& f) {
  Formula translated = translate_pal(f);
  return {check(p, f), check(p, translated)};
}

}  // namespace glal
