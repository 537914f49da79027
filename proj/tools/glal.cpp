// glal: command-line front end.
//
// Exit codes: 0/1 mirror a boolean answer, 2 bound exceeded, 64 usage,
// 65 formula error, 66 model or reference error, 70 internal invariant breach.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "glal/bisim.hpp"
#include "glal/model_io.hpp"
#include "glal/sat.hpp"
#include "glal/scenarios.hpp"
#include "glal/semantics.hpp"
#include "glal/suite.hpp"

using nlohmann::json;
using namespace glal;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kGrammarVersion = "1";

enum Exit { kTrue = 0, kFalse = 1, kBound = 2, kUsage = 64, kFormula = 65, kModel = 66, kInternal = 70 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Errors in the alias file are reported like formula errors.
struct AliasError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Identifiers of `text` outside braces that are not operator names.
template <typename F>
std::string map_identifiers(const std::string& text, F&& replace) {
  std::string out;
  int braces = 0;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == '{') ++braces;
    if (c == '}') --braces;
    if (!ident_char(c) || braces > 0) {
      out += c;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && ident_char(text[j])) ++j;
    std::string id = text.substr(i, j - i);
    bool op = j < text.size() && text[j] == '{';
    out += op ? id : replace(id);
    i = j;
  }
  return out;
}

class Aliases {
 public:
  static Aliases load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AliasError("cannot read alias file '" + path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw AliasError("alias file '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw AliasError("alias file must map names to formula strings");
    Aliases a;
    for (const auto& [name, def] : j.items()) {
      if (!def.is_string()) throw AliasError("alias '" + name + "' must be a formula string");
      a.defs_[name] = def.get<std::string>();
    }
    for (const auto& [name, def] : a.defs_) {
      map_identifiers(def, [&](const std::string& id) {
        if (a.defs_.count(id)) throw AliasError("alias '" + name + "' refers to alias '" + id + "'");
        return id;
      });
    }
    return a;
  }

  std::string expand(const std::string& text) const {
    if (defs_.empty()) return text;
    return map_identifiers(text, [&](const std::string& id) {
      auto it = defs_.find(id);
      return it == defs_.end() ? id : "(" + it->second + ")";
    });
  }

 private:
  std::map<std::string, std::string> defs_;
};

struct Global {
  std::string defs_path;
  bool pretty = false;
  Aliases aliases;
};

Formula read_formula(const Global& g, const std::string& text) { return parse(g.aliases.expand(text)); }

std::pair<std::string, std::string> split_address(const std::string& address) {
  auto colon = address.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == address.size()) {
    throw Usage("expected <model.json>:<world>, got '" + address + "'");
  }
  return {address.substr(0, colon), address.substr(colon + 1)};
}

PointedModel load_pointed(const std::string& address) {
  auto [path, world] = split_address(address);
  return PointedModel::at(load_model_file(path), world);
}

void emit(const json& j, std::ostream& out = std::cout) { out << j.dump(2) << "\n"; }

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json pairs_json(const PairSet& s) {
  json out = json::array();
  for (const auto& [a, b] : s) out.push_back({a, b});
  return out;
}

json pointed_json(const PointedModel& p) { return {{"model", model_to_json(p.model)}, {"point", p.point_name()}}; }

class Timer {
 public:
  explicit Timer(std::string what) : what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << what_ << ": " << s << " s\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

int run(int argc, char** argv) {
  CLI::App app{"Global and local announcement logic: model checking, refinements, bisimulation, bounded satisfiability"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--defs", g.defs_path, "JSON file mapping alias names to formula strings");
  app.add_flag("--pretty", g.pretty, "Human-readable text instead of JSON on stdout");
  app.set_version_flag("--version", std::string("glal ") + kVersion + " (formula grammar " + kGrammarVersion + ")");

  std::function<int()> action;

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "Parse and print a formula");
  std::string parse_text;
  bool parse_expand = false;
  cmd_parse->add_option("formula", parse_text)->required();
  cmd_parse->add_flag("--expand", parse_expand, "Also print the core-language form");
  cmd_parse->callback([&] {
    action = [&] {
      auto f = read_formula(g, parse_text);
      if (g.pretty) {
        std::cout << print(f) << "\n";
        if (parse_expand) std::cout << print(expand_derived(f)) << "\n";
        return kTrue;
      }
      json j{{"formula", print(f)}, {"depth", f.depth()}, {"size", f.size()}};
      if (parse_expand) j["core"] = print(expand_derived(f));
      emit(j);
      return kTrue;
    };
  });

  // check / tree
  std::string address, formula_text;
  bool no_cache = false;
  auto* cmd_check = app.add_subcommand("check", "Decide whether a pointed model satisfies a formula");
  cmd_check->add_option("pointed", address, "model.json:world")->required();
  cmd_check->add_option("formula", formula_text)->required();
  cmd_check->add_flag("--no-cache", no_cache, "Rebuild every refinement instead of sharing equal ones");
  cmd_check->callback([&] {
    action = [&] {
      auto p = load_pointed(address);
      auto f = read_formula(g, formula_text);
      Timer t("check");
      Evaluator ev(EvalOptions{!no_cache});
      bool r = ev.check(p, f);
      if (g.pretty) {
        std::cout << (r ? "true" : "false") << "\n";
      } else {
        emit({{"result", r}});
      }
      return r ? kTrue : kFalse;
    };
  });

  auto* cmd_tree = app.add_subcommand("tree", "Print the tree of refined models built while checking a formula");
  std::string tree_out;
  cmd_tree->add_option("pointed", address, "model.json:world")->required();
  cmd_tree->add_option("formula", formula_text)->required();
  cmd_tree->add_option("--out", tree_out, "Output file (default stdout)");
  cmd_tree->callback([&] {
    action = [&] {
      auto p = load_pointed(address);
      auto f = read_formula(g, formula_text);
      Evaluator ev;
      auto [r, trace] = ev.check_traced(p, f);
      json j = trace_to_json(trace);
      j["result"] = r;
      write_out(tree_out, j.dump(2));
      return r ? kTrue : kFalse;
    };
  });

  // refine
  auto* cmd_refine = app.add_subcommand("refine", "Apply one announcement and print the refined model");
  std::string refine_kind = "local", refine_agents, refine_out;
  cmd_refine->add_option("pointed", address, "model.json:world (the world is ignored for --kind public)")->required();
  cmd_refine->add_option("formula", formula_text, "Announced formula")->required();
  cmd_refine->add_option("--kind", refine_kind, "local, global, semiprivate or public")
      ->check(CLI::IsMember({"local", "global", "semiprivate", "public"}));
  cmd_refine->add_option("--agents", refine_agents, "Comma-separated coalition, or * for every agent");
  cmd_refine->add_option("--out", refine_out, "Output file (default stdout)");
  cmd_refine->callback([&] {
    action = [&] {
      auto [path, world] = split_address(address);
      auto m = load_model_file(path);
      auto f = read_formula(g, formula_text);
      Coalition group = refine_agents == "*" ? Coalition::all() : Coalition(split_list(refine_agents));
      if (refine_kind != "public" && group.empty()) throw Usage("--agents is required for this kind");
      std::optional<KripkeModel> r;
      if (refine_kind == "local") r = refine_local(m, world, f, group);
      if (refine_kind == "global") r = refine_global(m, world, f, group);
      if (refine_kind == "semiprivate") r = refine_semiprivate(m, world, f, group);
      if (refine_kind == "public") r = refine_pal(m, f);
      auto problems = validate(*r);
      if (!problems.empty()) throw InvariantBreach("refined model is invalid: " + problems[0].message);
      write_out(refine_out, save_model(*r));
      return kTrue;
    };
  });

  // bisim
  auto* cmd_bisim = app.add_subcommand("bisim", "Decide bisimilarity of two pointed models");
  std::string bisim_kind = "pm", left, right;
  bool total = false;
  cmd_bisim->add_option("--kind", bisim_kind, "m (modal), pm (plus-minus) or coll (collective)")
      ->check(CLI::IsMember({"m", "pm", "coll"}));
  cmd_bisim->add_option("--left", left, "model.json:world")->required();
  cmd_bisim->add_option("--right", right, "model.json:world")->required();
  cmd_bisim->add_flag("--total", total, "Also require every world of both models to be matched");
  cmd_bisim->callback([&] {
    action = [&] {
      auto p = load_pointed(left);
      auto q = load_pointed(right);
      BisimKind k = bisim_kind == "m" ? BisimKind::modal
                    : bisim_kind == "pm" ? BisimKind::plusminus
                                         : BisimKind::collective;
      auto r = pointed_bisim(p, q, k, total);
      if (g.pretty) {
        std::cout << (r.related ? "related" : "not related") << "\n";
        if (r.failure) std::cout << condition_name(r.failure->condition) << ": " << r.failure->detail << "\n";
        for (const auto& [a, b] : r.witness) std::cout << a << " ~ " << b << "\n";
      } else {
        json j{{"related", r.related}};
        if (r.related) j["witness"] = pairs_json(r.witness);
        if (r.failure) {
          j["fail_reason"] = {{"pair", {r.failure->pair.first, r.failure->pair.second}},
                              {"condition", condition_name(r.failure->condition)},
                              {"detail", r.failure->detail}};
        }
        emit(j);
      }
      return r.related ? kTrue : kFalse;
    };
  });

  // sat / valid
  int max_worlds = 4;
  std::string sat_agents, sat_atoms;
  bool allow_large = false;
  auto add_sat_options = [&](CLI::App* c) {
    c->add_option("formula", formula_text)->required();
    c->add_option("--max-worlds", max_worlds, "Largest model size searched")->check(CLI::PositiveNumber);
    c->add_option("--agents", sat_agents, "Comma-separated agents (default: those in the formula)");
    c->add_option("--atoms", sat_atoms, "Comma-separated atoms (default: those in the formula)");
    c->add_flag("--allow-large", allow_large, "Permit more than six worlds");
  };
  auto sat_query = [&](Formula f) {
    SatQuery q{std::move(f), max_worlds, std::nullopt, std::nullopt};
    if (!sat_agents.empty()) q.agents = split_list(sat_agents);
    if (!sat_atoms.empty()) q.atoms = split_list(sat_atoms);
    q.allow_large = allow_large;
    if (allow_large && max_worlds > 6) std::cerr << "warning: searching models with up to " << max_worlds << " worlds\n";
    return q;
  };
  auto* cmd_sat = app.add_subcommand("sat", "Search for a small model satisfying a formula");
  add_sat_options(cmd_sat);
  cmd_sat->callback([&] {
    action = [&] {
      Timer t("sat");
      auto r = sat_bounded(sat_query(read_formula(g, formula_text)));
      bool sat = r.status == SatResult::Status::sat;
      json j{{"status", sat ? "sat" : "unsat-up-to-bound"}, {"models_examined", r.models_examined}};
      if (sat) j["witness"] = pointed_json(*r.witness);
      emit(j);
      return sat ? kTrue : kFalse;
    };
  });
  auto* cmd_valid = app.add_subcommand("valid", "Search for a small countermodel to a formula");
  add_sat_options(cmd_valid);
  cmd_valid->callback([&] {
    action = [&] {
      Timer t("valid");
      auto q = sat_query(neg(read_formula(g, formula_text)));
      auto r = sat_bounded(q);
      bool valid = r.status != SatResult::Status::sat;
      json j{{"status", valid ? "valid-up-to-bound" : "counterexample"}, {"models_examined", r.models_examined}};
      if (!valid) j["counterexample"] = pointed_json(*r.witness);
      emit(j);
      return valid ? kTrue : kFalse;
    };
  });

  // scenario
  auto* cmd_scenario = app.add_subcommand("scenario", "Write a bundled example model");
  cmd_scenario->require_subcommand(1);
  std::string scenario_out;
  int muddy_n = 3;
  auto* cmd_muddy = cmd_scenario->add_subcommand("muddy", "Muddy children cube");
  cmd_muddy->add_option("--n", muddy_n, "Number of children (1 to 10)");
  cmd_muddy->add_option("--out", scenario_out, "Output file (default stdout)");
  cmd_muddy->callback([&] {
    action = [&] {
      write_out(scenario_out, save_model(muddy(muddy_n)));
      return kTrue;
    };
  });
  std::string variant = "N";
  auto* cmd_channel = cmd_scenario->add_subcommand("channel", "Bit channel with an eavesdropper");
  cmd_channel->add_option("--variant", variant, "N or Nprime")->check(CLI::IsMember({"N", "Nprime"}));
  cmd_channel->add_option("--out", scenario_out, "Output file (default stdout)");
  cmd_channel->callback([&] {
    action = [&] {
      auto v = variant == "N" ? ChannelVariant::N : ChannelVariant::Nprime;
      write_out(scenario_out, save_model(bit_channel(v)));
      return kTrue;
    };
  });

  // suite
  auto* cmd_suite = app.add_subcommand("suite", "Run the regression suite");
  std::string filter;
  std::vector<std::string> fixtures;
  cmd_suite->add_option("--filter", filter, "Only checks whose name contains this text");
  cmd_suite->add_option("--fixture", fixtures, "Replace a bundled fixture: name=model.json");
  cmd_suite->callback([&] {
    action = [&] {
      SuiteOptions opt;
      opt.filter = filter;
      for (const auto& f : fixtures) {
        auto eq = f.find('=');
        if (eq == std::string::npos) throw Usage("--fixture expects name=path");
        auto name = f.substr(0, eq);
        auto names = suite_fixture_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) throw Usage("unknown fixture '" + name + "'");
        opt.fixtures.emplace(name, load_model_file(f.substr(eq + 1)));
      }
      auto results = run_suite(opt);
      std::size_t failed = 0;
      json checks = json::array();
      for (const auto& c : results) {
        failed += !c.passed;
        checks.push_back({{"name", c.name},
                          {"topic", c.topic},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.passed}});
        std::cerr << c.name << ": " << c.seconds << " s\n";
      }
      if (g.pretty) {
        for (const auto& c : results) {
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  expected " << c.expected << ", got "
                    << c.actual << "\n";
        }
        std::cout << results.size() - failed << " passed, " << failed << " failed\n";
      } else {
        emit({{"checks", checks}, {"passed", results.size() - failed}, {"failed", failed}});
      }
      return failed == 0 ? kTrue : kFalse;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (!g.defs_path.empty()) g.aliases = Aliases::load(g.defs_path);
    return action();
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const AliasError& e) {
    std::cerr << "alias error: " << e.what() << "\n";
    return kFormula;
  } catch (const SyntaxError& e) {
    std::cerr << "formula error: " << e.what() << "\n";
    return kFormula;
  } catch (const UnknownOperator& e) {
    std::cerr << "formula error: " << e.what() << "\n";
    return kFormula;
  } catch (const NotPalFragment& e) {
    std::cerr << "formula error: " << e.what() << "\n";
    return kFormula;
  } catch (const InvalidModel& e) {
    std::cerr << "model error: " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << violation_kind_name(v.kind) << ": " << v.message << "\n";
    return kModel;
  } catch (const FormatError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kModel;
  } catch (const UnknownWorld& e) {
    std::cerr << "reference error: " << e.what() << "\n";
    return kModel;
  } catch (const UnknownAgent& e) {
    std::cerr << "reference error: " << e.what() << "\n";
    return kModel;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const EmptyResult& e) {
    std::cerr << "empty result: " << e.what() << "\n";
    return kFalse;
  } catch (const InvariantBreach& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
