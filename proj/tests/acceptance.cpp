// Acceptance run: one line per criterion, followed by indented details.
//
// Some expected values below do not hold under the semantics as implemented
// (the sub-checks flagged refuted). They are still evaluated and printed as
// failures with a concrete counterexample, but they do not make the process
// exit nonzero. Any other failing sub-check does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"

#include "glal/bisim.hpp"
#include "glal/generate.hpp"
#include "glal/model_io.hpp"
#include "glal/sat.hpp"
#include "glal/scenarios.hpp"
#include "glal/semantics.hpp"

using namespace glal;

namespace {

struct Sub {
  std::string name;
  bool ok;
  bool refuted;  // known to fail; reported, not fatal
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Sub>()> run;
  double limit_seconds = 0;  // 0: none
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string yn(bool b) { return b ? "true" : "false"; }

// Engine verdict, cross-checked against the brute-force evaluator.
bool holds(const PointedModel& p, const Formula& f) {
  bool v = check(p, f);
  if (v != oracle::holds(p.model, p.point_name(), f)) {
    throw std::runtime_error("engine and reference evaluator disagree on " + print(f));
  }
  return v;
}

bool at(const KripkeModel& m, const std::string& w, const std::string& f) {
  return holds(PointedModel::at(m, w), parse(f));
}

Sub expect(const std::string& name, bool actual, bool expected, bool refuted = false) {
  return {name, actual == expected, refuted, "got " + yn(actual) + ", expected " + yn(expected)};
}

std::string describe(const PointedModel& p) {
  return "point " + p.point_name() + " in " + model_to_json(p.model).dump();
}

// ---------------------------------------------------------------------------

const std::string alpha = "(m_r | m_g | m_b)";

std::vector<Sub> example1() {
  auto m = muddy(3);
  std::vector<Sub> out{
      expect("[a]-{r,g,b} E a", at(m, "100", "[" + alpha + "]-{r,g,b} E{r,g,b} " + alpha), true),
      expect("[a]-{r,g,b} K{r} m_r", at(m, "100", "[" + alpha + "]-{r,g,b} K{r} m_r"), true),
      expect("[a]-{r,g,b} C a", at(m, "100", "[" + alpha + "]-{r,g,b} C{r,g,b} " + alpha), false),
      expect("[a]-{r,g,b} M{b}M{r}M{b} !a", at(m, "100", "[" + alpha + "]-{r,g,b} M{b} M{r} M{b} !" + alpha), true),
      expect("[a]+{r,b} C{r,b} a", at(m, "100", "[" + alpha + "]+{r,b} C{r,b} " + alpha), true),
      expect("[a]+{r,b} C{r,g,b} a", at(m, "100", "[" + alpha + "]+{r,b} C{r,g,b} " + alpha), false),
  };
  auto s = sat_set(m, parse("[" + alpha + "]-{r,g,b} C{r,g,b} " + alpha));
  out.push_back({"[a]-{r,g,b} C a false at every s != 000", world_names(m, s) == std::set<std::string>{"000"}, false,
                 "holds exactly at " + std::to_string(s.count()) + " world(s)"});
  return out;
}

std::vector<Sub> example2() {
  auto n = bit_channel(ChannelVariant::N), np = bit_channel(ChannelVariant::Nprime);
  return {
      expect("N,w1 |= [bit0]{r} K{r} bit0", at(n, "w1", "[bit0]{r} K{r} bit0"), true),
      expect("N,w1 |= [bit0]{r} (!Kw{e} bit0 & K{e} Kw{r} bit0)",
             at(n, "w1", "[bit0]{r} (!Kw{e} bit0 & K{e} Kw{r} bit0)"), true),
      expect("N',w1 |= [bit0]{r} !K{e} Kw{r} bit0", at(np, "w1", "[bit0]{r} !K{e} Kw{r} bit0"), true),
      // e considers w2 possible and bit0 is false there; D{r,e} is reflexive, so K{e} D{r,e} bit0 fails in N too.
      expect("N,w1 |= [bit0]{r} K{e} D{r,e} bit0", at(n, "w1", "[bit0]{r} K{e} D{r,e} bit0"), true, true),
      expect("N',w1 |= [bit0]{r} K{e} D{r,e} bit0", at(np, "w1", "[bit0]{r} K{e} D{r,e} bit0"), false),
      expect("N,w1 |= [bit0]{r} K{e} Kw{r} bit0", at(n, "w1", "[bit0]{r} K{e} Kw{r} bit0"), true),
      expect("N',w1 |= [bit0]{r} K{e} Kw{r} bit0", at(np, "w1", "[bit0]{r} K{e} Kw{r} bit0"), false),
  };
}

std::vector<Sub> expressivity() {
  auto n = bit_channel(ChannelVariant::N), np = bit_channel(ChannelVariant::Nprime);
  auto p = PointedModel::at(n, "w1"), q = PointedModel::at(np, "w1");
  std::vector<Sub> out{
      expect("max_bisim modal relates (w1, w1)", max_bisim(n, np, BisimKind::modal).count({"w1", "w1"}) > 0, true),
      expect("max_bisim plus-minus relates (w1, w1)", max_bisim(n, np, BisimKind::plusminus).count({"w1", "w1"}) > 0,
             false),
      expect("collectively bisimilar", pointed_bisim(p, q, BisimKind::collective).related, true),
  };
  auto f = distinguishing_formula_search(p, q, 5);
  bool ok = f && check(p, *f) && !check(q, *f) && f->depth() <= 5;
  out.push_back({"separating formula of depth <= 5", ok, false, f ? print(*f) : "none found"});
  return out;
}

// Validity corpus over random models. Failures of the nested-announcement laws
// are rare (around one instance in a thousand), hence the large corpus.
std::vector<Sub> validities() {
  struct Schema {
    std::string name;
    bool refuted;
    std::function<Formula(const Formula& psi, const Formula& chi, const Formula& chi2, const Formula& prop,
                          const Coalition& A)>
        make;
    int counterexamples = 0;
    std::string first;
  };
  using F = const Formula&;
  using C = const Coalition&;
  std::vector<Schema> schemas{
      {"propositional [psi]- E psi", false, [](F, F, F, F prop, C A) { return ann_local(prop, A, everybody(A, prop)); }},
      {"propositional [psi]+ C psi", false, [](F, F, F, F prop, C A) { return ann_global(prop, A, common(A, prop)); }},
  };
  for (auto [sign, ann] : {std::pair{std::string("-"), &ann_local}, std::pair{std::string("+"), &ann_global}}) {
    schemas.push_back({"[psi]" + sign + " p <-> (psi -> p)", false,
                       [ann](F psi, F, F, F, C A) { return iff(ann(psi, A, atom("p")), implies(psi, atom("p"))); }});
    schemas.push_back({"[psi]" + sign + " !chi <-> (psi -> ![psi]" + sign + " chi)", false, [ann](F psi, F chi, F, F, C A) {
                         return iff(ann(psi, A, neg(chi)), implies(psi, neg(ann(psi, A, chi))));
                       }});
    schemas.push_back({"[psi]" + sign + " (chi & chi') <-> conjunction", false, [ann](F psi, F chi, F chi2, F, C A) {
                         return iff(ann(psi, A, conj(chi, chi2)), conj(ann(psi, A, chi), ann(psi, A, chi2)));
                       }});
    schemas.push_back({"axiom K for [psi]" + sign, false, [ann](F psi, F chi, F chi2, F, C A) {
                         return implies(ann(psi, A, implies(chi, chi2)), implies(ann(psi, A, chi), ann(psi, A, chi2)));
                       }});
  }
  schemas.push_back({"[psi]- E chi <-> (psi -> E [psi]- chi)", true, [](F psi, F chi, F, F, C A) {
                       return iff(ann_local(psi, A, everybody(A, chi)), implies(psi, everybody(A, ann_local(psi, A, chi))));
                     }});
  schemas.push_back({"[psi]-[chi]- chi' <-> [psi & [psi]- chi]- chi'", true, [](F psi, F chi, F chi2, F, C A) {
                       return iff(ann_local(psi, A, ann_local(chi, A, chi2)), ann_local(conj(psi, ann_local(psi, A, chi)), A, chi2));
                     }});
  schemas.push_back({"[psi]+[chi]+ chi' <-> [psi & [psi]+ chi]+ chi'", true, [](F psi, F chi, F chi2, F, C A) {
                       return iff(ann_global(psi, A, ann_global(chi, A, chi2)),
                                  ann_global(conj(psi, ann_global(psi, A, chi)), A, chi2));
                     }});

  Rng rng(2024);
  const int models = 20000, per_model = 3;
  auto t0 = Clock::now();
  long instances = 0;
  for (int i = 0; i < models; ++i) {
    auto m = random_model(rng, {5, 3, 2, false});
    FormulaShape shape{3, FormulaFamily::glal, m.agents(), {"p", "q"}};
    for (int k = 0; k < per_model; ++k) {
      auto psi = random_formula(rng, shape), chi = random_formula(rng, shape), chi2 = random_formula(rng, shape);
      auto prop = random_propositional(rng, 3, {"p", "q"});
      auto A = random_coalition(rng, m.agents());
      for (auto& s : schemas) {
        auto f = s.make(psi, chi, chi2, prop, A);
        auto sat = sat_set(m, f);
        ++instances;
        if (sat.all()) continue;
        const auto& w = m.worlds()[(~sat).find_first()];
        if (oracle::holds(m, w, f)) throw std::runtime_error("reference evaluator accepts " + print(f) + " at " + w);
        if (s.counterexamples++ == 0) s.first = print(f) + " fails at " + w + " of " + model_to_json(m).dump();
      }
    }
  }
  double secs = since(t0);
  std::vector<Sub> out;

  // Smallest counterexamples seen so far, so the verdict does not hinge on the random draw.
  struct Fixed {
    std::string name, formula, world, model;
  };
  const std::vector<Fixed> fixed{
      {"[psi]- E chi <-> (psi -> E [psi]- chi)",
       "[C{a} q]-{a,b} E{a,b} M{a} C{a,b} q <-> (C{a} q -> E{a,b} [C{a} q]-{a,b} M{a} C{a,b} q)", "w0",
       R"({"agents":["a","b"],"relations":{"a":{"partition":[["w0","w2"],["w1"],["w3"]]},
           "b":{"partition":[["w0","w1"],["w2"],["w3"]]}},"valuation":{"p":["w1","w3"],"q":["w0","w2","w3"]},
           "worlds":["w0","w1","w2","w3"]})"},
      {"[psi]-[chi]- chi' <-> [psi & [psi]- chi]- chi'",
       "[[!q]-{a,b} E{c} q]-{a,c} [M{a} Kw{a} p]-{a,c} <Kw{b} true>-{a,b} E{a,c} p <-> "
       "[([!q]-{a,b} E{c} q) & [[!q]-{a,b} E{c} q]-{a,c} M{a} Kw{a} p]-{a,c} <Kw{b} true>-{a,b} E{a,c} p",
       "w4",
       R"({"agents":["a","b","c"],"relations":{"a":{"partition":[["w0","w1","w3"],["w2","w4"]]},
           "b":{"partition":[["w0","w1","w2","w3","w4"]]},"c":{"partition":[["w0","w1","w2","w3","w4"]]}},
           "valuation":{"p":["w2","w3","w4"],"q":["w0","w1","w4"]},"worlds":["w0","w1","w2","w3","w4"]})"},
      {"[psi]+[chi]+ chi' <-> [psi & [psi]+ chi]+ chi'",
       "[q]+{b} [<<p>-{a,b} q>-{a} <q>-{a,b} p]+{b} C{a,b} (q -> p) <-> "
       "[q & [q]+{b} <<p>-{a,b} q>-{a} <q>-{a,b} p]+{b} C{a,b} (q -> p)",
       "w1",
       R"({"agents":["a","b"],"relations":{"a":{"partition":[["w0","w1"],["w2"]]},
           "b":{"partition":[["w0","w1","w2"]]}},"valuation":{"p":["w1"],"q":["w1","w2"]},
           "worlds":["w0","w1","w2"]})"},
  };
  for (const auto& x : fixed) {
    bool v = at(load_model(x.model), x.world, x.formula);
    out.push_back({x.name + ", fixed instance", v, true, (v ? "holds" : "fails") + (" at " + x.world)});
  }

  for (const auto& s : schemas) {
    std::string detail = std::to_string(s.counterexamples) + " counterexample(s)";
    if (s.counterexamples) detail += "; first: " + s.first;
    out.push_back({s.name, s.counterexamples == 0, s.refuted, detail});
  }
  out.push_back({"corpus size and budget", secs < 300, false,
                 std::to_string(models) + " models, " + std::to_string(instances) + " instances in " +
                     std::to_string(secs) + " s"});
  return out;
}

std::vector<Sub> nonvalidities() {
  std::vector<Sub> out;

  auto t_model = KripkeModel::from_partitions({"w"}, {"a"}, {{"a", {{"w"}}}}, {});
  auto t = PointedModel::at(t_model, "w");
  out.push_back(expect("T: [p]{a} q true while q false at a p-free world",
                       holds(t, parse("[p]{a} q")) && !holds(t, parse("q")), true));
  auto tb = valid_bounded(parse("[p]{a} q -> q"), 2);
  out.push_back({"T: bounded search finds a countermodel", !tb.valid && tb.counterexample &&
                                                               !holds(*tb.counterexample, parse("[p]{a} q -> q")),
                 false, tb.counterexample ? describe(*tb.counterexample) : "none"});

  auto no_st = muddy_no_stepping(3), all_know = muddy_all_know(3);
  Coalition all{"r", "g", "b"};
  auto after_father = muddy_round(PointedModel::at(muddy(3), "110"), RoundKind::father_global);
  auto round2 = muddy_round(after_father, RoundKind::no_stepping);
  out.push_back(expect("110 after the father: nobody knows (round 1)", holds(after_father, no_st), true));
  out.push_back(expect("110 after one no-stepping round: every muddy child knows (round 2)", holds(round2, all_know), true));
  // The published formulas count rounds from the first no-stepping announcement: off by one.
  out.push_back(expect("110 after the father |= [no_st]+ no_st", holds(after_father, ann_global(no_st, all, no_st)),
                       true, true));
  out.push_back(expect("110 after the father |= [no_st]+[no_st]+ all muddy know",
                       holds(after_father, ann_global(no_st, all, ann_global(no_st, all, all_know))), true));
  out.push_back(expect("110 after the father |= [no_st]+[no_st]+ no_st",
                       holds(after_father, ann_global(no_st, all, ann_global(no_st, all, no_st))), false, true));
  auto at111 = muddy_round(PointedModel::at(muddy(3), "111"), RoundKind::father_global);
  bool four = holds(at111, ann_global(no_st, all, no_st)) &&
              !holds(at111, ann_global(no_st, all, ann_global(no_st, all, no_st)));
  out.push_back(expect("axiom 4 counterexample at 111 after the father", four, true));

  auto b = parse("(p & !K{a} p) & ![p]{a} <p>{a} (p & !K{a} p)");
  auto r = sat_bounded(SatQuery{b, 4});
  bool b_ok = r.status == SatResult::Status::sat && r.witness && holds(*r.witness, b);
  out.push_back({"B: Moore countermodel within 4 worlds", b_ok, false, r.witness ? describe(*r.witness) : "none"});
  return out;
}

std::vector<Sub> refinement_invariant() {
  Rng rng(6);
  int done = 0, bad_validate = 0, bad_subset = 0;
  std::string first;
  while (done < 10000) {
    auto m = random_model(rng, {6, 3, 2, false});
    FormulaShape shape{3, FormulaFamily::glal, m.agents(), {"p", "q"}};
    auto truth = sat_set(m, random_formula(rng, shape));
    auto group = m.require_agents(random_coalition(rng, m.agents()));
    for (WorldIndex w = 0; w < m.world_count() && done < 10000; ++w) {
      for (auto kind : {RefinementKind::local, RefinementKind::global}) {
        ++done;
        auto draft = refinement_draft(m, w, truth, group, kind);
        auto vs = validate(draft);
        if (!vs.empty()) {
          if (!bad_validate++) first = vs.front().message;
          continue;
        }
        auto r = KripkeModel::from_draft(draft);
        for (AgentIndex a = 0; a < m.agent_count(); ++a) {
          for (WorldIndex v = 0; v < m.world_count(); ++v) {
            if (!r.cell(a, v).is_subset_of(m.cell(a, v))) ++bad_subset;
          }
        }
      }
    }
  }
  return {{"refined relations are equivalences", bad_validate == 0, false,
           std::to_string(done) + " refinements, " + std::to_string(bad_validate) + " invalid" +
               (first.empty() ? "" : "; first: " + first)},
          {"refined relations are subsets of the originals", bad_subset == 0, false,
           std::to_string(bad_subset) + " enlarged class(es)"}};
}

std::vector<Sub> pal_embedding() {
  Rng rng(7);
  int mismatches = 0, points = 0;
  std::string first;
  for (int i = 0; i < 500; ++i) {
    auto m = random_model(rng, {5, 3, 2, true});
    FormulaShape shape{4, FormulaFamily::pal, m.agents(), {"p", "q"}};
    auto f = random_formula(rng, shape);
    for (const auto& w : m.worlds()) {
      ++points;
      auto [native, translated] = check_pal_equiv(PointedModel::at(m, w), f);
      if (native != translated && !mismatches++) first = print(f) + " at " + w;
    }
  }
  return {{"native and translated evaluation agree", mismatches == 0, false,
           "500 formulas, " + std::to_string(points) + " pointed checks, " + std::to_string(mismatches) +
               " mismatch(es)" + (first.empty() ? "" : "; first: " + first)}};
}

std::vector<Sub> preservation() {
  Rng rng(8);
  int pairs = 0, unverified = 0, mismatches = 0, refined = 0, refined_broken = 0;
  std::string first;
  while (pairs < 200) {
    auto m = random_model(rng, {4, 3, 2, false});
    auto [copy, witness] = duplicate_worlds(rng, m, 2);
    auto maximal = max_bisim(m, copy, BisimKind::plusminus);
    for (const auto& pr : witness) {
      if (!maximal.count(pr)) ++unverified;
    }
    if (!check_relation(m, copy, witness, BisimKind::plusminus).empty()) ++unverified;
    FormulaShape shape{4, FormulaFamily::glal, m.agents(), {"p", "q"}};
    for (const auto& [w, v] : witness) {
      if (pairs >= 200) break;
      if (w == v) continue;
      ++pairs;
      auto p = PointedModel::at(m, w), q = PointedModel::at(copy, v);
      for (int k = 0; k < 50; ++k) {
        auto f = random_formula(rng, shape);
        if (check(p, f) != check(q, f) && !mismatches++) first = print(f) + " at " + w + " / " + v;
      }
      auto psi = random_formula(rng, shape);
      auto group = random_coalition(rng, m.agents());
      for (auto kind : {RefinementKind::local, RefinementKind::global}) {
        ++refined;
        auto rm = refine_with(m, p.point, sat_set(m, psi), m.require_agents(group), kind);
        auto rc = refine_with(copy, q.point, sat_set(copy, psi), copy.require_agents(group), kind);
        if (!pointed_bisim(PointedModel{rm, p.point}, PointedModel{rc, q.point}, BisimKind::plusminus).related) {
          ++refined_broken;
        }
      }
    }
  }
  return {{"constructed pairs verified by max_bisim", unverified == 0, false,
           std::to_string(unverified) + " witness pair(s) not confirmed"},
          {"pairs agree on 50 formulas each", mismatches == 0, false,
           std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatch(es)" +
               (first.empty() ? "" : "; first: " + first)},
          {"refined pairs stay plus-minus related", refined_broken == 0, false,
           std::to_string(refined) + " refinements, " + std::to_string(refined_broken) + " unrelated"}};
}

std::vector<Sub> scaling() {
  std::vector<Sub> out;
  auto m8 = muddy(8);
  auto alpha8 = muddy_alpha(8), no_st8 = muddy_no_stepping(8), know8 = muddy_all_know(8);
  auto everyone = Coalition(muddy_agents(8));
  auto f = ann_global(alpha8, everyone, ann_global(no_st8, everyone, ann_global(no_st8, everyone, know8)));
  auto g = ann_local(alpha8, everyone, ann_global(no_st8, Coalition{"r", "g", "b"}, ann_local(atom("m_r"), Coalition{"r"}, know8)));
  auto t0 = Clock::now();
  Evaluator ev;
  auto s1 = ev.sat_set(m8, f);
  auto s2 = ev.sat_set(m8, g);
  double secs = since(t0);
  out.push_back({"muddy(8), two 3-deep nested announcements over all 256 worlds", secs < 10, false,
                 std::to_string(secs) + " s, " + std::to_string(ev.refinements_built()) + " refinements built, " +
                     std::to_string(s1.count()) + "/" + std::to_string(s2.count()) + " worlds satisfy"});

  auto m5 = muddy(5);
  auto all5 = Coalition(muddy_agents(5));
  std::vector<Formula> fs{
      ann_global(muddy_alpha(5), all5, ann_global(muddy_no_stepping(5), all5, muddy_all_know(5))),
      parse("[m_r | m_g]-{r,g} [!K{r} m_r]+{r,g,b} <m_b>-{b,c4} K{g} m_g"),
      parse("[M{r} m_g]+{r,c5} C{r,c5} [K{g} m_b]-{g} !Kw{c4} m_c4"),
  };
  bool same = true;
  Evaluator on({true}), off({false});
  for (const auto& h : fs) same = same && on.sat_set(m5, h) == off.sat_set(m5, h);
  out.push_back({"muddy(5): cached and uncached evaluation agree", same, false,
                 std::to_string(on.refinements_built()) + " vs " + std::to_string(off.refinements_built()) +
                     " refinements built"});
  return out;
}

std::vector<Sub> sat_coherence() {
  Rng rng(10);
  int witnesses = 0, bad = 0;
  std::string first;
  for (int i = 0; i < 200; ++i) {
    FormulaShape shape{3, FormulaFamily::glal, {"a", "b"}, {"p", "q"}};
    auto f = random_formula(rng, shape);
    auto r = sat_bounded(SatQuery{f, 3, std::vector<std::string>{"a", "b"}, std::vector<std::string>{"p", "q"}});
    if (!r.witness) continue;
    ++witnesses;
    if (!check(*r.witness, f) && !bad++) first = print(f);
  }
  return {{"every witness re-checks true", bad == 0 && witnesses > 0, false,
           "200 queries, " + std::to_string(witnesses) + " witnesses, " + std::to_string(bad) + " failed" +
               (first.empty() ? "" : "; first: " + first)}};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Muddy children regression", example1, 1.0},
      {2, "Bit channel regression", example2, 1.0},
      {3, "Expressivity witness", expressivity},
      {4, "Validity corpus", validities, 300.0},
      {5, "Non-validity witnesses", nonvalidities},
      {6, "Refinements preserve equivalence", refinement_invariant},
      {7, "Public announcement embedding", pal_embedding},
      {8, "Plus-minus bisimulation preservation", preservation},
      {9, "Scaling", scaling},
      {10, "Bounded satisfiability coherence", sat_coherence},
  };
  int fatal = 0, passed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    std::vector<Sub> subs;
    try {
      subs = c.run();
    } catch (const std::exception& e) {
      subs = {{"run", false, false, std::string("exception: ") + e.what()}};
    }
    double secs = since(t0);
    if (c.limit_seconds > 0) {
      subs.push_back({"time limit", secs < c.limit_seconds, false,
                      std::to_string(secs) + " s of " + std::to_string(c.limit_seconds)});
    }
    bool ok = true, only_refuted = true;
    for (const auto& s : subs) {
      ok = ok && s.ok;
      if (!s.ok && !s.refuted) only_refuted = false;
    }
    passed += ok;
    if (!ok && !only_refuted) ++fatal;
    char head[160];
    std::snprintf(head, sizeof head, "%s %2d  %-40s %8.2f s%s", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                  ok || !only_refuted ? "" : "  (refuted claim)");
    std::cout << head << "\n";
    for (const auto& s : subs) {
      std::cout << "      " << (s.ok ? "ok   " : s.refuted ? "REFUTED " : "FAILED ") << s.name << ": " << s.detail
                << "\n";
    }
    std::cout.flush();
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass";
  if (fatal == 0 && passed < static_cast<int>(criteria.size())) std::cout << "; remaining failures are refuted claims";
  std::cout << "\n";
  return fatal == 0 ? 0 : 1;
}
