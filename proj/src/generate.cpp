#include "glal/generate.hpp"

#include <algorithm>

namespace glal {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

std::vector<std::uint32_t> random_labels(Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> lab(n, 0);
  // Bias toward coarse partitions so that announcements have something to refine.
  int classes = uniform(rng, 1, static_cast<int>(n));
  for (auto& l : lab) l = static_cast<std::uint32_t>(uniform(rng, 0, classes - 1));
  return lab;
}

}  // namespace

KripkeModel random_model(Rng& rng, const ModelShape& shape) {
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, shape.max_worlds));
  const int k = uniform(rng, 1, shape.max_agents);
  const int atoms = uniform(rng, 1, shape.max_atoms);
  std::vector<std::string> worlds, agents;
  for (std::size_t i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i));
  for (int i = 0; i < k; ++i) agents.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::vector<std::uint32_t>> labels;
  for (int i = 0; i < k; ++i) labels.push_back(random_labels(rng, n));
  if (shape.connected) {
    // Fold every other component into the first agent's class of w0.
    std::vector<AgentIndex> all(agents.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    KripkeModel probe(worlds, agents, labels, {});
    auto comp = closure_labels(probe, all);
    for (std::size_t w = 0; w < n; ++w) {
      if (comp[w] != comp[0]) labels[0][w] = labels[0][0];
    }
  }
  std::map<std::string, WorldSet> val;
  for (int i = 0; i < atoms; ++i) {
    WorldSet s(n);
    for (std::size_t w = 0; w < n; ++w) s[w] = coin(rng);
    val[std::string(1, static_cast<char>('p' + i))] = s;
  }
  return KripkeModel(worlds, agents, labels, val);
}

Formula random_propositional(Rng& rng, int depth, const std::vector<std::string>& atoms) {
  if (depth <= 1 || coin(rng, 0.3)) {
    int r = uniform(rng, 0, 9);
    if (r == 0) return top();
    if (r == 1) return bot();
    return atom(pick(rng, atoms));
  }
  switch (uniform(rng, 0, 3)) {
    case 0: return neg(random_propositional(rng, depth - 1, atoms));
    case 1: return conj(random_propositional(rng, depth - 1, atoms), random_propositional(rng, depth - 1, atoms));
    case 2: return disj(random_propositional(rng, depth - 1, atoms), random_propositional(rng, depth - 1, atoms));
    default: return implies(random_propositional(rng, depth - 1, atoms), random_propositional(rng, depth - 1, atoms));
  }
}

Coalition random_coalition(Rng& rng, const std::vector<std::string>& agents) {
  std::vector<std::string> out;
  while (out.empty()) {
    for (const auto& a : agents) {
      if (coin(rng)) out.push_back(a);
    }
  }
  return Coalition(out);
}

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  const int d = shape.depth;
  if (d <= 1 || coin(rng, 0.15)) {
    int r = uniform(rng, 0, 11);
    if (r == 0) return top();
    if (r == 1) return bot();
    return atom(pick(rng, shape.atoms));
  }
  FormulaShape sub = shape;
  sub.depth = d - 1;
  auto rec = [&] { return random_formula(rng, sub); };
  const auto& agent = pick(rng, shape.agents);
  std::vector<int> ops{0, 1, 2, 3, 4, 5, 6, 7, 8};
  if (shape.family == FormulaFamily::glal) ops.insert(ops.end(), {9, 9, 10, 10});
  if (shape.family == FormulaFamily::pal) ops.insert(ops.end(), {11, 11, 11});
  if (shape.family == FormulaFamily::distributed) ops.insert(ops.end(), {12, 12});
  switch (pick(rng, ops)) {
    case 0: return neg(rec());
    case 1: return conj(rec(), rec());
    case 2: return disj(rec(), rec());
    case 3: return implies(rec(), rec());
    case 4: return know(agent, rec());
    case 5: return know_whether(agent, rec());
    case 6: return dual(agent, rec());
    case 7: return everybody(random_coalition(rng, shape.agents), rec());
    case 8: return common(random_coalition(rng, shape.agents), rec());
    case 9: {
      auto psi = rec();
      auto c = random_coalition(rng, shape.agents);
      return coin(rng) ? ann_local(psi, c, rec()) : dia_local(psi, c, rec());
    }
    case 10: {
      auto psi = rec();
      auto c = random_coalition(rng, shape.agents);
      return coin(rng) ? ann_global(psi, c, rec()) : dia_global(psi, c, rec());
    }
    case 11: {
      auto psi = rec();
      return pal(psi, rec());
    }
    default: return distributed(random_coalition(rng, shape.agents), rec());
  }
}

std::pair<KripkeModel, PairSet> duplicate_worlds(Rng& rng, const KripkeModel& m, int copies) {
  const std::size_t n = m.world_count();
  std::vector<WorldIndex> origin;
  for (WorldIndex w = 0; w < n; ++w) origin.push_back(w);
  std::vector<int> count(n, 0);
  std::vector<std::string> names = m.worlds();
  for (int i = 0; i < copies; ++i) {
    auto w = static_cast<WorldIndex>(uniform(rng, 0, static_cast<int>(n) - 1));
    names.push_back(m.worlds()[w] + "'" + std::to_string(++count[w]));
    origin.push_back(w);
  }
  // The index constructor wants sorted names.
  std::vector<std::size_t> order(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return names[x] < names[y]; });
  std::vector<std::string> sorted;
  std::vector<WorldIndex> src;
  for (auto i : order) {
    sorted.push_back(names[i]);
    src.push_back(origin[i]);
  }
  std::vector<std::vector<std::uint32_t>> labels(m.agent_count());
  for (AgentIndex a = 0; a < m.agent_count(); ++a) {
    for (auto w : src) labels[a].push_back(m.label(a, w));
  }
  std::map<std::string, WorldSet> val;
  for (const auto& [p, set] : m.valuation()) {
    WorldSet s(sorted.size());
    for (std::size_t i = 0; i < src.size(); ++i) s[i] = set.test(src[i]);
    val[p] = s;
  }
  PairSet witness;
  for (std::size_t i = 0; i < src.size(); ++i) witness.emplace(m.worlds()[src[i]], sorted[i]);
  return {KripkeModel(sorted, m.agents(), labels, val), witness};
}

}  // namespace glal
