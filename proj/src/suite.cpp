#include "glal/suite.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "glal/bisim.hpp"
#include "glal/sat.hpp"
#include "glal/scenarios.hpp"
#include "glal/semantics.hpp"

namespace glal {

namespace {

const std::string kAlpha = "(m_r | m_g | m_b)";

std::string subst_alpha(std::string text) {
  for (std::size_t pos; (pos = text.find("alpha")) != std::string::npos;) text.replace(pos, 5, kAlpha);
  return text;
}

std::string show(bool b) { return b ? "true" : "false"; }

struct Spec {
  std::string name;
  std::string topic;
  std::string expected;
  std::function<std::string()> run;
};

}  // namespace

std::vector<std::string> suite_fixture_names() { return {"channel_N", "channel_Nprime", "muddy3"}; }

std::vector<SuiteCheck> run_suite(const SuiteOptions& options) {
  auto fixture = [&](const std::string& name, auto build) {
    auto it = options.fixtures.find(name);
    return it != options.fixtures.end() ? it->second : build();
  };
  const KripkeModel muddy3 = fixture("muddy3", [] { return muddy(3); });
  const KripkeModel chan_n = fixture("channel_N", [] { return bit_channel(ChannelVariant::N); });
  const KripkeModel chan_np = fixture("channel_Nprime", [] { return bit_channel(ChannelVariant::Nprime); });

  auto at = [](const KripkeModel& m, const std::string& w) { return PointedModel::at(m, w); };
  auto holds = [&](const KripkeModel& m, const std::string& w, const std::string& f) {
    return [&m, w, f, at] { return show(check(at(m, w), parse(subst_alpha(f)))); };
  };

  std::vector<Spec> specs;
  auto add = [&](std::string name, std::string topic, std::string expected, std::function<std::string()> run) {
    specs.push_back({std::move(name), std::move(topic), std::move(expected), std::move(run)});
  };

  // Muddy children, three children, actual world 100.
  add("example1.local_all_everybody_knows", "local announcement of alpha to all: everybody knows alpha", "true",
      holds(muddy3, "100", "[alpha]-{r,g,b} E{r,g,b} alpha"));
  add("example1.local_all_red_learns", "local announcement of alpha to all: red learns she is muddy", "true",
      holds(muddy3, "100", "[alpha]-{r,g,b} K{r} m_r"));
  add("example1.local_all_no_common_knowledge", "local announcement of alpha to all: alpha not common knowledge",
      "false", holds(muddy3, "100", "[alpha]-{r,g,b} C{r,g,b} alpha"));
  add("example1.local_all_epistemic_path", "after the local announcement a b-r-b path still reaches !alpha",
      "true", holds(muddy3, "100", "[alpha]-{r,g,b} M{b} M{r} M{b} !alpha"));
  add("example1.global_rb_common_knowledge", "global announcement to red and blue: common knowledge among them",
      "true", holds(muddy3, "100", "[alpha]+{r,b} C{r,b} alpha"));
  add("example1.global_rb_not_common_to_all", "global announcement to red and blue: not common to all three",
      "false", holds(muddy3, "100", "[alpha]+{r,b} C{r,g,b} alpha"));
  add("example1.local_common_knowledge_set", "worlds where the local announcement yields common knowledge", "[000]",
      [&] {
        auto s = world_list(muddy3, sat_set(muddy3, parse(subst_alpha("[alpha]-{r,g,b} C{r,g,b} alpha"))));
        std::string out = "[";
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
        return out + "]";
      });
  add("example1.no_stepping_round_one", "after the father, at 110 nobody knows her state", "true",
      [&] {
        auto p = muddy_round(at(muddy3, "110"), RoundKind::father_global);
        return show(check(p, muddy_no_stepping(3)));
      });
  add("example1.no_stepping_round_two", "one no-stepping round later the muddy children at 110 know", "true",
      [&] {
        auto p = muddy_round(muddy_round(at(muddy3, "110"), RoundKind::father_global), RoundKind::no_stepping);
        return show(check(p, muddy_all_know(3)));
      });

  // Bit channel with eavesdropper.
  add("example2.receiver_learns", "N: r learns the bit from a private announcement", "true",
      holds(chan_n, "w1", "[bit0]{r} K{r} bit0"));
  add("example2.eavesdropper_learns_that", "N: e does not learn the bit but learns that r knows it", "true",
      holds(chan_n, "w1", "[bit0]{r} (!Kw{e} bit0 & K{e} Kw{r} bit0)"));
  add("example2.eavesdropper_unsure_in_nprime", "N': e does not know that r has learnt the bit", "true",
      holds(chan_np, "w1", "[bit0]{r} !K{e} Kw{r} bit0"));
  add("example2.distributed_whether_in_n", "N: e knows r and e jointly know whether bit0", "true",
      holds(chan_n, "w1", "[bit0]{r} K{e} (D{r,e} bit0 | D{r,e} !bit0)"));
  add("example2.distributed_whether_in_nprime", "N': the same fails", "false",
      holds(chan_np, "w1", "[bit0]{r} K{e} (D{r,e} bit0 | D{r,e} !bit0)"));

  // Bisimulation and expressivity on the channel models.
  auto related = [&](BisimKind k) {
    return [&, k] { return show(pointed_bisim(at(chan_n, "w1"), at(chan_np, "w1"), k).related); };
  };
  add("bisim.modal_related", "N,w1 and N',w1 are modally bisimilar", "true", related(BisimKind::modal));
  add("bisim.collective_related", "N,w1 and N',w1 are collectively bisimilar", "true", related(BisimKind::collective));
  add("bisim.plusminus_unrelated", "N,w1 and N',w1 are not plus-minus bisimilar", "false",
      related(BisimKind::plusminus));
  add("expressivity.witness_formula", "[bit0]{r} K{e} Kw{r} bit0 separates N,w1 from N',w1", "true/false",
      [&] {
        auto f = parse("[bit0]{r} K{e} Kw{r} bit0");
        return show(check(at(chan_n, "w1"), f)) + "/" + show(check(at(chan_np, "w1"), f));
      });
  add("expressivity.search_finds_separator", "bounded search finds a separating formula of depth at most 5", "found",
      [&] {
        auto f = distinguishing_formula_search(at(chan_n, "w1"), at(chan_np, "w1"), 5);
        if (!f) return std::string("none");
        bool ok = check(at(chan_n, "w1"), *f) && !check(at(chan_np, "w1"), *f);
        return ok ? std::string("found") : "wrong: " + print(*f);
      });

  // Validities, checked on every model with at most three worlds.
  auto valid = [](const std::string& f, int worlds) {
    return [f, worlds] { return valid_bounded(parse(f), worlds).valid ? std::string("valid") : "counterexample"; };
  };
  const std::vector<std::pair<std::string, std::string>> validities{
      {"reduction_atom_local", "[p & !K{a} q]-{a,b} q <-> ((p & !K{a} q) -> q)"},
      {"reduction_atom_global", "[p & !K{a} q]+{a,b} q <-> ((p & !K{a} q) -> q)"},
      {"reduction_not_local", "[p]-{a,b} !K{a} q <-> (p -> ![p]-{a,b} K{a} q)"},
      {"reduction_not_global", "[p]+{a,b} !K{a} q <-> (p -> ![p]+{a,b} K{a} q)"},
      {"reduction_and_local", "[K{b} p]-{a,b} (K{a} p & q) <-> ([K{b} p]-{a,b} K{a} p & [K{b} p]-{a,b} q)"},
      {"reduction_and_global", "[K{b} p]+{a,b} (K{a} p & q) <-> ([K{b} p]+{a,b} K{a} p & [K{b} p]+{a,b} q)"},
      {"propositional_local_everybody", "[p | !q]-{a,b} E{a,b} (p | !q)"},
      {"propositional_global_common", "[p | !q]+{a,b} C{a,b} (p | !q)"},
      {"axiom_k_local", "[p]-{a,b} (K{a} q -> q) -> ([p]-{a,b} K{a} q -> [p]-{a,b} q)"},
      {"axiom_k_global", "[p]+{a,b} (K{a} q -> q) -> ([p]+{a,b} K{a} q -> [p]+{a,b} q)"},
      {"single_agent_everybody", "[p & M{a} q]{a} E{a} q <-> ((p & M{a} q) -> E{a} [p & M{a} q]{a} q)"},
      {"single_agent_local_equals_global", "[M{a} p]-{a} K{a} q <-> [M{a} p]+{a} K{a} q"},
  };
  for (const auto& [name, f] : validities) add("validity." + name, f, "valid", valid(f, 3));

  add("nonvalidity.axiom_t", "[p]{a} q -> q", "counterexample", valid("[p]{a} q -> q", 2));
  add("nonvalidity.axiom_b_moore", "Moore sentence is not preserved by announcing and re-announcing p",
      "counterexample", valid("(p & !K{a} p) -> [p]{a} <p>{a} (p & !K{a} p)", 4));
  add("nonvalidity.axiom_4_muddy", "at 111 after the father: [no_st]+ no_st holds, [no_st]+[no_st]+ no_st fails",
      "true/false", [&] {
        auto p = muddy_round(at(muddy3, "111"), RoundKind::father_global);
        auto ns = muddy_no_stepping(3);
        Coalition all{"r", "g", "b"};
        return show(check(p, ann_global(ns, all, ns))) + "/" +
               show(check(p, ann_global(ns, all, ann_global(ns, all, ns))));
      });

  std::vector<SuiteCheck> out;
  for (const auto& s : specs) {
    if (!options.filter.empty() && s.name.find(options.filter) == std::string::npos) continue;
    SuiteCheck c{s.name, s.topic, s.expected, "", false, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.actual = s.run();
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.passed = c.actual == c.expected;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const SuiteCheck& a, const SuiteCheck& b) { return a.name < b.name; });
  return out;
}

}  // namespace glal
