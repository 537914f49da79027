#pragma once

// Random models and formulas for property tests and the acceptance runs.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "glal/bisim.hpp"
#include "glal/model.hpp"
#include "glal/syntax.hpp"

namespace glal {

using Rng = std::mt19937_64;

struct ModelShape {
  int max_worlds = 5;
  int max_agents = 3;
  int max_atoms = 2;
  bool connected = false;  // one class under the union of all agents
};

/// Agents a, b, c, ... and atoms p, q, r, ...; at least one of each.
KripkeModel random_model(Rng& rng, const ModelShape& shape = {});

enum class FormulaFamily {
  epistemic,  // atoms, connectives, K, Kw, M, E, C
  glal,       // epistemic plus local and global announcements
  pal,        // epistemic plus public announcements
  distributed // epistemic plus D
};

struct FormulaShape {
  int depth = 3;
  FormulaFamily family = FormulaFamily::glal;
  std::vector<std::string> agents{"a", "b"};
  std::vector<std::string> atoms{"p", "q"};
};

/// Formula of depth at most shape.depth; leaves are atoms or constants.
Formula random_formula(Rng& rng, const FormulaShape& shape);
/// Propositional formula of depth at most `depth`.
Formula random_propositional(Rng& rng, int depth, const std::vector<std::string>& atoms);
/// Nonempty random subset of `agents`.
Coalition random_coalition(Rng& rng, const std::vector<std::string>& agents);

/// A copy of `m` with some worlds duplicated: each copy has the same
/// valuation and sits in every cell of its original, so exact profiles are
/// preserved. Copies are named "<world>'<k>". Also returns the witnessing
/// plus-minus bisimulation (originals and copies to their originals).
std::pair<KripkeModel, PairSet> duplicate_worlds(Rng& rng, const KripkeModel& m, int copies);

}  // namespace glal
