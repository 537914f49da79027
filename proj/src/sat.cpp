#include "glal/sat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "glal/semantics.hpp"

namespace glal {

std::vector<std::vector<std::uint32_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> rgs(n, 0);
  std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t i, std::uint32_t max) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (std::uint32_t v = 0; v <= max + 1; ++v) {
      rgs[i] = v;
      go(i + 1, std::max(max, v));
    }
  };
  go(1, 0);
  return out;
}

namespace {

double binomial(double n, double k) {
  double r = 1;
  for (int i = 1; i <= static_cast<int>(k); ++i) r = r * (n - k + i) / i;
  return r;
}

// Renumber labels to first-occurrence order.
std::vector<std::uint32_t> normalized(const std::vector<std::uint32_t>& lab) {
  std::vector<std::uint32_t> map(lab.size() + 1, UINT32_MAX), out(lab.size());
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < lab.size(); ++i) {
    if (map[lab[i]] == UINT32_MAX) map[lab[i]] = next++;
    out[i] = map[lab[i]];
  }
  return out;
}

// Permutations of worlds that keep each block of equal valuations in place.
std::vector<std::vector<std::size_t>> block_permutations(const std::vector<std::uint32_t>& val) {
  const std::size_t n = val.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && val[j] == val[i]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::function<void(std::size_t)> go = [&](std::size_t b) {
    if (b == blocks.size()) {
      out.push_back(perm);
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      go(b + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  go(0);
  return out;
}

// True when no block permutation yields a lexicographically smaller tuple of partitions.
bool canonical(const std::vector<const std::vector<std::uint32_t>*>& parts,
               const std::vector<std::vector<std::size_t>>& perms) {
  const std::size_t n = perms.empty() ? 0 : perms[0].size();
  std::vector<std::uint32_t> moved(n);
  for (std::size_t pi = 1; pi < perms.size(); ++pi) {
    const auto& perm = perms[pi];
    for (const auto* lab : parts) {
      // New world i is old world perm[i].
      for (std::size_t i = 0; i < n; ++i) moved[i] = (*lab)[perm[i]];
      auto norm = normalized(moved);
      if (norm < *lab) return false;
      if (norm > *lab) break;
    }
  }
  return true;
}

}  // namespace

double sat_search_size(std::size_t max_worlds, std::size_t agents, std::size_t atoms, bool prune_isomorphic) {
  double total = 0;
  const double vals = std::pow(2.0, static_cast<double>(atoms));
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    double bell = static_cast<double>(set_partitions(n).size());
    double v = prune_isomorphic ? binomial(vals + n - 1, n) : std::pow(vals, static_cast<double>(n));
    total += std::pow(bell, static_cast<double>(agents)) * v;
  }
  return total;
}

SatResult sat_bounded(const SatQuery& q) {
  if (q.max_worlds < 1) throw BoundExceeded("max_worlds must be at least 1");
  if (q.max_worlds > 6 && !q.allow_large) {
    throw BoundExceeded("max_worlds above 6 needs the explicit override");
  }
  std::vector<std::string> agents;
  if (q.agents) {
    agents = *q.agents;
  } else {
    auto s = agents_of(q.formula);
    agents.assign(s.begin(), s.end());
  }
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  std::vector<std::string> atoms;
  if (q.atoms) {
    atoms = *q.atoms;
  } else {
    auto s = atoms_of(q.formula);
    atoms.assign(s.begin(), s.end());
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (atoms.size() > 16) throw BoundExceeded("too many atoms for bounded search");

  const std::size_t maxw = static_cast<std::size_t>(q.max_worlds);
  double estimate = sat_search_size(maxw, agents.size(), atoms.size(), q.prune_isomorphic);
  if (estimate > static_cast<double>(q.budget)) {
    throw BoundExceeded("bounded search would examine about " + std::to_string(static_cast<long long>(estimate)) +
                        " models, over the budget of " + std::to_string(q.budget));
  }

  SatResult res{SatResult::Status::unsat_up_to_bound, std::nullopt, 0};
  const std::uint32_t nvals = 1u << atoms.size();
  const std::size_t k = agents.size();
  Evaluator ev;

  for (std::size_t n = 1; n <= maxw; ++n) {
    std::vector<std::string> worlds;
    for (std::size_t i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i + 1));
    const auto parts = set_partitions(n);
    std::vector<std::uint32_t> val(n, 0);
    // Valuation vectors: nondecreasing when pruning (worlds can always be
    // sorted by valuation), arbitrary otherwise.
    bool more_vals = true;
    while (more_vals) {
      std::vector<std::vector<std::size_t>> perms;
      if (q.prune_isomorphic) perms = block_permutations(val);
      std::map<std::string, WorldSet> valuation;
      for (std::size_t p = 0; p < atoms.size(); ++p) {
        WorldSet s(n);
        for (std::size_t w = 0; w < n; ++w) s[w] = (val[w] >> p) & 1u;
        valuation[atoms[p]] = s;
      }
      std::vector<std::size_t> choice(k, 0);
      bool more_parts = true;
      while (more_parts) {
        std::vector<const std::vector<std::uint32_t>*> chosen;
        for (std::size_t a = 0; a < k; ++a) chosen.push_back(&parts[choice[a]]);
        if (!q.prune_isomorphic || canonical(chosen, perms)) {
          ++res.models_examined;
          std::vector<std::vector<std::uint32_t>> labels;
          for (auto* c : chosen) labels.push_back(*c);
          KripkeModel m(worlds, agents, labels, valuation);
          WorldSet s = ev.sat_set(m, q.formula);
          auto first = s.find_first();
          if (first != WorldSet::npos) {
            res.status = SatResult::Status::sat;
            res.witness = PointedModel{std::move(m), first};
            return res;
          }
        }
        more_parts = false;
        for (std::size_t a = k; a-- > 0;) {
          if (++choice[a] < parts.size()) {
            more_parts = true;
            break;
          }
          choice[a] = 0;
        }
      }
      more_vals = false;
      for (std::size_t w = n; w-- > 0;) {
        if (val[w] + 1 < nvals) {
          ++val[w];
          if (q.prune_isomorphic) {
            for (std::size_t v = w + 1; v < n; ++v) val[v] = val[w];
          } else {
            for (std::size_t v = w + 1; v < n; ++v) val[v] = 0;
          }
          more_vals = true;
          break;
        }
      }
    }
  }
  return res;
}

ValidResult valid_bounded(const Formula& f, int max_worlds, std::optional<std::vector<std::string>> agents,
                          std::optional<std::vector<std::string>> atoms) {
  SatQuery q{neg(f), max_worlds, std::move(agents), std::move(atoms)};
  auto r = sat_bounded(q);
  ValidResult out{r.status != SatResult::Status::sat, std::move(r.witness), r.models_examined};
  return out;
}

}  // namespace glal
