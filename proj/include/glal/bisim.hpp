#pragma once

// Modal, collective and plus-minus bisimulations between two models, and a
// bounded search for formulas telling two pointed models apart.
//
// Both models are read over the union of their agent sets; an agent missing
// from one model relates each of its worlds only to itself.
//
// Plus-minus bisimulations are rigid: Forth with the empty profile makes any
// nonempty one total, and Reach then forces every world pair's exact profile
// to be preserved. Such a relation is therefore determined by a bijection
// between the classes of "all agents agree" that preserves the profiles
// between classes, pairing worlds with equal valuations. The union of two
// plus-minus bisimulations is usually not one, so max_bisim returns the union
// of all of them, and pointed_bisim returns one concrete witness.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glal/model.hpp"
#include "glal/syntax.hpp"

namespace glal {

enum class BisimKind { modal, plusminus, collective };

const char* bisim_kind_name(BisimKind k);

using WorldPair = std::pair<std::string, std::string>;
using PairSet = std::set<WorldPair>;

struct BisimFailure {
  enum class Condition { Atoms, Forth, Back, Reach };
  WorldPair pair;
  Condition condition;
  std::string detail;
};

const char* condition_name(BisimFailure::Condition c);

struct BisimResult {
  bool related = false;
  PairSet witness;                     // when related
  std::optional<BisimFailure> failure;  // when not
};

PairSet max_bisim(const KripkeModel& m, const KripkeModel& n, BisimKind kind);

/// With `total`, additionally require every world of either model to be
/// related to some world of the other (model-level bisimilarity).
BisimResult pointed_bisim(const PointedModel& p, const PointedModel& q, BisimKind kind, bool total = false);

/// Every condition the relation breaks, for it and for its converse.
std::vector<BisimFailure> check_relation(const KripkeModel& m, const KripkeModel& n, const PairSet& relation,
                                         BisimKind kind);

/// First formula of AST depth at most `depth` true at p and false at q, in a
/// fixed enumeration order, or nothing. Throws BoundExceeded for models over
/// six worlds or when the set of reachable refinements grows too large.
std::optional<Formula> distinguishing_formula_search(const PointedModel& p, const PointedModel& q, int depth);

}  // namespace glal
