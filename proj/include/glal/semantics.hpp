#pragma once

// Satisfaction sets, model refinements and pointed model checking.
//
// Announcement clauses build one refinement per evaluated world. Refinements
// are memoized on their scope signature: a local refinement depends on w only
// through the cells R_a(w) of the announcing agents, a global one only through
// the closure class R^C_A(w). Evaluation is demand-driven: a subformula is
// computed only on the worlds some enclosing operator actually inspects.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "glal/model.hpp"
#include "glal/syntax.hpp"

namespace glal {

enum class RefinementKind { local, global, pal, semiprivate };

const char* refinement_kind_name(RefinementKind k);

struct RefinementKey {
  RefinementKind kind;
  std::vector<std::string> coalition;  // resolved agent names
  Formula announced;
  /// Local: the cell label of w for each announcing agent. Global: the closure
  /// label of w for the coalition. Semi-private: the closure label for all
  /// agents. Empty for public announcements.
  std::vector<std::uint32_t> scope_signature;
  WorldSet scope;

  friend bool operator==(const RefinementKey& a, const RefinementKey& b) {
    return a.kind == b.kind && a.coalition == b.coalition && a.announced == b.announced &&
           a.scope_signature == b.scope_signature;
  }
};

// ---------------------------------------------------------------------------
// Refinements by an explicit truth set (the announced formula's satisfaction set).

/// Scope of the refinement for agent `a`: R_a(w) (local), R^C_A(w) (global),
/// R^C_Ag(w) (semi-private).
WorldSet refinement_scope(const KripkeModel& m, WorldIndex w, AgentIndex a,
                          const std::vector<AgentIndex>& group, RefinementKind kind);

/// New neighbourhood of every world for every agent, computed literally from
/// the case table. Agents outside the group keep their cells.
std::vector<std::vector<WorldSet>> refined_neighborhoods(const KripkeModel& m, WorldIndex w,
                                                         const WorldSet& truth,
                                                         const std::vector<AgentIndex>& group,
                                                         RefinementKind kind);

/// Pair-level view of refined_neighborhoods, for brute-force validation.
ModelDraft refinement_draft(const KripkeModel& m, WorldIndex w, const WorldSet& truth,
                            const std::vector<AgentIndex>& group, RefinementKind kind);

/// Local, global or semi-private refinement. Throws InvariantBreach if the
/// result is not an equivalence (never expected).
KripkeModel refine_with(const KripkeModel& m, WorldIndex w, const WorldSet& truth,
                        const std::vector<AgentIndex>& group, RefinementKind kind);

/// Restriction to `truth`; returns the model and, for each new world, its
/// index in `m`. Throws EmptyResult for an empty set.
std::pair<KripkeModel, std::vector<WorldIndex>> restrict_to(const KripkeModel& m, const WorldSet& truth);

// ---------------------------------------------------------------------------
// Evaluation

struct EvalOptions {
  bool cache_refinements = true;
};

struct TraceNode {
  std::optional<RefinementKey> key;  // empty at the root
  std::shared_ptr<const KripkeModel> model;
  std::vector<TraceNode> children;
};

/// Tree of every model built while answering one query.
struct EvalTrace {
  std::string point;
  TraceNode root;
};

nlohmann::json trace_to_json(const EvalTrace& trace);

class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {});
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  /// [[f]]_M. Throws UnknownAgent.
  WorldSet sat_set(const KripkeModel& m, const Formula& f);
  bool check(const PointedModel& p, const Formula& f);
  /// Like check, also returning the tree of refinements built on the way.
  std::pair<bool, EvalTrace> check_traced(const PointedModel& p, const Formula& f);

  /// Refined models built since construction (cache hits excluded).
  std::size_t refinements_built() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

WorldSet sat_set(const KripkeModel& m, const Formula& f);
bool check(const PointedModel& p, const Formula& f);

// Name-level refinements; the announced formula is evaluated in `m` first.
KripkeModel refine_local(const KripkeModel& m, const std::string& w, const Formula& psi, const Coalition& group);
KripkeModel refine_global(const KripkeModel& m, const std::string& w, const Formula& psi, const Coalition& group);
KripkeModel refine_semiprivate(const KripkeModel& m, const std::string& w, const Formula& psi,
                               const Coalition& group);
/// Throws EmptyResult when psi holds nowhere.
KripkeModel refine_pal(const KripkeModel& m, const Formula& psi);

/// (native public-announcement evaluation, evaluation of the GLAL translation).
/// Throws NotPalFragment.
std::pair<bool, bool> check_pal_equiv(const PointedModel& p, const Formula& f);

}  // namespace glal
