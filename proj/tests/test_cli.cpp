#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "groupspec/cli.hpp"
#include "groupspec/io.hpp"

using namespace groupspec;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("groupspec_cli_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("spec of the one-point fixture") {
  const Run r = run({"spec", "--g", "sym:5", "--h", "prod:sym:5,cyc:2", "--embed", "first-factor", "--no-timing"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["command"]["name"] == "spec");
  CHECK(j["results"]["size"] == 1);
  CHECK(j["results"]["points"][0]["order"] == 2);
  CHECK_FALSE(j.contains("timing_ms"));
}

TEST_CASE("timing block present unless suppressed") {
  const Run r = run({"domain", "--g", "sym:3", "--h", "sym:3"});
  REQUIRE(r.code == 0);
  CHECK(r.json().contains("timing_ms"));
  CHECK(r.json()["results"]["isDomain"] == false);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"spec", "--g", "sym:5"}).code == 1);
  CHECK(run({"spec", "--g", "nosuch:3", "--h", "sym:3"}).code == 1);
  CHECK(run({"spec", "--g", "sym:3", "--h", "sym:4", "--embed", "sideways"}).code == 1);
  CHECK(run({"sheaf", "--g", "sym:3", "--h", "sym:3", "--coeff", "zmod:0"}).code == 1);
  CHECK(run({"solve"}).code == 1);
  CHECK(run({"spec", "--in", "/nonexistent/file.json"}).code == 1);
}

TEST_CASE("cap exceeded exits 2") {
  const Run r = run({"spec", "--g", "sym:5", "--h", "sym:6", "--embed", "fix-last", "--max-order", "100"});
  CHECK(r.code == 2);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("environment cap and flag precedence") {
  ::setenv("GROUPSPEC_MAX_ORDER", "50", 1);
  CHECK(run({"domain", "--g", "sym:5", "--h", "sym:5"}).code == 2);
  CHECK(run({"domain", "--g", "sym:5", "--h", "sym:5", "--max-order", "200", "--no-timing"}).code == 0);
  ::setenv("GROUPSPEC_MAX_ORDER", "garbage", 1);
  CHECK(run({"domain", "--g", "sym:3", "--h", "sym:3"}).code == 1);
  ::unsetenv("GROUPSPEC_MAX_ORDER");
}

TEST_CASE("reports are byte-identical without timings") {
  const std::vector<std::string> a{"topology", "--g", "alt:5", "--h", "prod:alt:5,alt:5", "--embed", "diagonal", "--no-timing"};
  const Run r1 = run(a), r2 = run(a);
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  const Json j = r1.json();
  CHECK(j["results"]["size"] == 2);
  CHECK(j["results"]["topology"]["discrete"] == true);
}

TEST_CASE("dot output of the specialization order") {
  const auto dot = std::filesystem::temp_directory_path() / "groupspec_cli_spec.dot";
  std::filesystem::remove(dot);
  const Run r = run({"spec", "--g", "alt:5", "--h", "prod:alt:5,alt:5", "--embed", "diagonal", "--dot", dot.string(), "--no-timing"});
  REQUIRE(r.code == 0);
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.rfind("digraph", 0) == 0);
  CHECK(text.find("P0") != std::string::npos);
  CHECK(text.find("P1") != std::string::npos);
  CHECK(text.find("->") == std::string::npos);  // discrete: no edges
}

TEST_CASE("absolute spectrum when only --h is given") {
  const Run r = run({"spec", "--h", "alt:5", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["size"] == 1);
  CHECK(r.json()["results"]["points"][0]["order"] == 1);
  CHECK(run({"spec", "--h", "cyc:6", "--no-timing"}).json()["results"]["size"] == 0);
}

TEST_CASE("JSON G-group input") {
  const auto p = scratch("gg.json", R"j({"group": "sym:3", "ambient": "sym:4", "embed": "fix-last"})j");
  const Run r = run({"domain", "--in", p.string(), "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["isDomain"] == false);

  const auto bad = scratch("bad.json", R"j({"group": "sym:3"})j");
  CHECK(run({"domain", "--in", bad.string()}).code == 1);
  const auto broken = scratch("broken.json", "{not json");
  CHECK(run({"domain", "--in", broken.string()}).code == 1);
}

TEST_CASE("sheaf command") {
  const Run r = run({"sheaf", "--g", "sym:5", "--h", "prod:sym:5,cyc:2", "--embed", "first-factor", "--coeff", "zmod:2", "--no-timing"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["results"]["coefficients"] == "zmod:2");
  for (const auto& e : j["results"]["opens"]) CHECK(e["aGlobalFamiliesAccepted"] == e["aGlobalFamiliesChecked"]);
}

TEST_CASE("lie-spec command") {
  const Run r = run({"lie-spec", "--g", "lie:sl2@5", "--h", "lie:gl2@5", "--no-timing"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["results"]["size"] == 1);
  CHECK(j["results"]["points"][0]["dim"] == 1);
  CHECK(run({"lie-spec", "--g", "lie:sl2@5", "--h", "lie:gl2@3"}).code == 1);

  const auto p = scratch("lie.json", R"j({"p": 3, "base": {"dim": 1}, "ambient": "lie:heis@3", "embedding": [[0], [0], [1]]})j");
  const Run q = run({"lie-spec", "--in", p.string(), "--no-timing"});
  REQUIRE(q.code == 0);
  CHECK(q.json()["results"]["size"] == 0);
}

TEST_CASE("solve command") {
  const auto p = scratch("sys.json", R"j({"group": "sym:4", "commutation": {"element": "(0 1)", "variables": 2}})j");
  const Run r = run({"solve", "--in", p.string(), "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["count"] == 16);
  CHECK(r.json()["results"]["tuples"].size() == 16);
  CHECK(r.json()["results"]["truncated"] == false);

  const auto w = scratch("words.json", R"j({"variables": 1, "words": [["x0", "x0"]]})j");
  const Run s = run({"solve", "--g", "sym:3", "--in", w.string(), "--no-timing"});
  REQUIRE(s.code == 0);
  CHECK(s.json()["results"]["count"] == 4);  // identity and three transpositions
}

TEST_CASE("verify single scope") {
  const Run r = run({"verify", "--suite", "normalizer", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(r.json()["results"]["pass"] == true);
  CHECK(run({"verify", "--suite", "nosuch"}).code == 1);
}
