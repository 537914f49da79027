#pragma once

// Bounded satisfiability: exhaustive search over all models with at most
// max_worlds worlds, up to isomorphism. "Unsatisfiable" always means "no
// model within the bound".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glal/model.hpp"
#include "glal/syntax.hpp"

namespace glal {

/// Every set partition of {0..n-1} as a restricted growth string, in lexicographic order.
std::vector<std::vector<std::uint32_t>> set_partitions(std::size_t n);

struct SatQuery {
  Formula formula;
  int max_worlds = 4;
  std::optional<std::vector<std::string>> agents;  // default: agents named in the formula
  std::optional<std::vector<std::string>> atoms;   // default: atoms in the formula
  bool prune_isomorphic = true;
  std::uint64_t budget = 10'000'000;  // candidate models
  bool allow_large = false;           // lift the six-world limit
};

struct SatResult {
  enum class Status { sat, unsat_up_to_bound };
  Status status;
  std::optional<PointedModel> witness;
  std::uint64_t models_examined = 0;
};

/// Throws BoundExceeded when the candidate count would exceed the budget or
/// max_worlds exceeds six without allow_large.
SatResult sat_bounded(const SatQuery& q);

struct ValidResult {
  bool valid;  // up to the bound
  std::optional<PointedModel> counterexample;
  std::uint64_t models_examined = 0;
};

ValidResult valid_bounded(const Formula& f, int max_worlds,
                          std::optional<std::vector<std::string>> agents = {},
                          std::optional<std::vector<std::string>> atoms = {});

/// Upper estimate of the candidates sat_bounded would examine.
double sat_search_size(std::size_t max_worlds, std::size_t agents, std::size_t atoms, bool prune_isomorphic);

}  // namespace glal
