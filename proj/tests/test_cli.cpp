#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

const fs::path& work() {
  static const fs::path dir = [] {
    fs::path d(GLAL_WORK);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

Run glal(const std::string& args) {
  auto out = work() / "stdout.txt";
  std::string cmd = std::string(GLAL_BIN) + " " + args + " > " + quote(out.string()) + " 2> /dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

std::string file(const std::string& name, const std::string& content) {
  auto p = work() / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string fixture(const std::string& name, const std::string& scenario) {
  auto p = (work() / name).string();
  REQUIRE(glal("scenario " + scenario + " --out " + quote(p)).code == 0);
  return p;
}

}  // namespace

TEST_CASE("check answers through the exit code") {
  auto m = fixture("muddy3.json", "muddy --n 3");
  auto defs = file("defs.json", R"({"a": "m_r | m_g | m_b"})");
  auto yes = glal("--defs " + quote(defs) + " check " + quote(m + ":100") + " " + quote("[a]-{r,g,b} K{r} m_r"));
  CHECK(yes.code == 0);
  CHECK(nlohmann::json::parse(yes.out)["result"] == true);
  CHECK(glal("--defs " + quote(defs) + " check " + quote(m + ":100") + " " + quote("[a]-{r,g,b} C{r,g,b} a")).code == 1);
  CHECK(glal("--defs " + quote(defs) + " check --no-cache " + quote(m + ":100") + " " + quote("[a]-{r,g,b} K{r} m_r")).code == 0);
}

TEST_CASE("error exit codes") {
  auto m = fixture("muddy2.json", "muddy --n 2");
  CHECK(glal("check " + quote(m + ":missing") + " m_r").code == 66);
  CHECK(glal("check " + quote(m + ":00") + " " + quote("K{zed} m_r")).code == 66);
  CHECK(glal("check " + quote(m + ":00") + " " + quote("m_r &")).code == 65);
  CHECK(glal("check " + quote(m + ":00") + " " + quote("Q{r} m_r")).code == 65);
  CHECK(glal("check " + quote((work() / "absent.json").string() + ":00") + " m_r").code == 66);
  CHECK(glal("check " + quote(file("broken.json", "{\"worlds\":")) + ":00 m_r").code == 66);
  CHECK(glal("frobnicate").code == 64);
  CHECK(glal("check").code == 64);
  CHECK(glal("sat p --max-worlds 9").code == 2);
  CHECK(glal("refine " + quote(m + ":00") + " false --kind public").code == 1);
}

TEST_CASE("aliases") {
  auto m = fixture("muddy3b.json", "muddy --n 3");
  auto nested = file("nested.json", R"({"a": "m_r", "b": "a & m_g"})");
  CHECK(glal("--defs " + quote(nested) + " check " + quote(m + ":110") + " b").code == 65);
  auto braces = file("braces.json", R"({"r": "m_g"})");
  // Identifiers inside coalition braces are agents, never aliases.
  CHECK(glal("--defs " + quote(braces) + " check " + quote(m + ":010") + " " + quote("K{r} r")).code == 0);
}

TEST_CASE("bisimulation verdicts") {
  auto n = fixture("N.json", "channel --variant N");
  auto np = fixture("Np.json", "channel --variant Nprime");
  auto pm = glal("bisim --kind pm --left " + quote(n + ":w1") + " --right " + quote(np + ":w1"));
  CHECK(pm.code == 1);
  CHECK(nlohmann::json::parse(pm.out)["related"] == false);
  CHECK(glal("bisim --kind m --left " + quote(n + ":w1") + " --right " + quote(np + ":w1")).code == 0);
  CHECK(glal("bisim --kind coll --left " + quote(n + ":w1") + " --right " + quote(np + ":w1")).code == 0);
}

TEST_CASE("sat and valid") {
  auto s = glal(quote("sat") + " " + quote("p & !K{a} p"));
  CHECK(s.code == 0);
  CHECK(glal("sat " + quote("p & !p")).code == 1);
  CHECK(glal("valid " + quote("[p]-{a,b} q <-> (p -> q)")).code == 0);
  CHECK(glal("valid " + quote("[p]{a} q -> q")).code == 1);
}

TEST_CASE("refine and tree output is deterministic") {
  auto m = fixture("muddy3c.json", "muddy --n 3");
  auto cmd = "refine " + quote(m + ":100") + " " + quote("m_r | m_g | m_b") + " --kind global --agents r,b";
  auto a = glal(cmd), b = glal(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto tree = "tree " + quote(m + ":100") + " " + quote("[m_r | m_g]-{r,g} [m_b]+{*} K{r} m_r");
  auto t1 = glal(tree), t2 = glal(tree);
  CHECK(t1.code <= 1);
  CHECK(t1.out == t2.out);
  CHECK(nlohmann::json::parse(t1.out).contains("children"));
}

TEST_CASE("suite filtering and fixture replacement") {
  auto all = glal("suite");
  CHECK(all.code == 0);
  auto only = glal("suite --filter example1");
  CHECK(only.code == 0);
  for (const auto& c : nlohmann::json::parse(only.out)["checks"]) {
    CHECK(c["name"].get<std::string>().rfind("example1.", 0) == 0);
  }
  auto bad = file("bad_muddy.json", R"({"worlds":["000","100"],"agents":["r","g","b"],
    "relations":{"r":{"partition":[["000","100"]]},"g":{"partition":[["000"],["100"]]},
    "b":{"partition":[["000"],["100"]]}},"valuation":{"m_r":["100"]}})");
  CHECK(glal("suite --fixture muddy3=" + quote(bad) + " --filter example2").code == 0);
  CHECK(glal("suite --fixture muddy3=" + quote(bad) + " --filter example1").code == 1);
}

TEST_CASE("version and parse") {
  auto v = glal("--version");
  CHECK(v.code == 0);
  CHECK(v.out.find("glal") != std::string::npos);
  auto p = glal("parse " + quote("K{a} p"));
  CHECK(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["formula"] == "K{a} (p)");
}
