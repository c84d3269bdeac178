#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "filtra/cli.hpp"
#include "filtra/random.hpp"
#include "filtra/scenario.hpp"
#include "json.hpp"

using namespace filtra;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string source(const std::string& rel) { return std::string(FILTRA_SOURCE_DIR) + "/" + rel; }

std::string read_file(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("filtra_cli_" + name)).string();
}

// A preorder table over {p,q} with one entry broken (AGM2 at {w2}).
std::string write_mutated_table() {
  const auto u = canonical_universe(AtomSet{"p", "q"});
  const RevisionTable t = revision_from_preorder(u, PlausibilityOrder({0, 1, 1, 2}))
                              .with_entry(PointSet(4, 0b0100), PointSet(4, 0b0010));
  const std::string path = temp("mutated.json");
  save_scenario(scenario_from_table(t, nullptr, "AGM2 broken at w2"), path);
  return path;
}

}  // namespace

TEST_CASE("detective demo is stable and matches the golden report") {
  const Run a = run({"demo", "detective"});
  const Run b = run({"demo", "detective"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == read_file(source("tests/golden/demo_detective.txt")));
  CHECK(a.out.find("[ok]   K contains ~ann") != std::string::npos);
  CHECK(a.out.find("E' = {a}") != std::string::npos);
}

TEST_CASE("fuzz is exhaustive on one atom and stable") {
  const Run a = run({"fuzz", "--atoms", "1", "--cases", "all", "--seed", "0"});
  CHECK(a.code == 0);
  CHECK(a.out == read_file(source("tests/golden/fuzz_atoms1_all.txt")));
  CHECK(a.out.find("exhaustive") != std::string::npos);
  const Run r1 = run({"fuzz", "--atoms", "2", "--cases", "50", "--seed", "9"});
  const Run r2 = run({"fuzz", "--atoms", "2", "--cases", "50", "--seed", "9"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out == read_file(source("tests/golden/fuzz_atoms2_50_seed9.txt")));
}

TEST_CASE("FILTRA_SEED overrides --seed") {
  const Run plain = run({"fuzz", "--atoms", "2", "--cases", "20", "--seed", "123"});
  setenv("FILTRA_SEED", "123", 1);
  const Run env = run({"fuzz", "--atoms", "2", "--cases", "20", "--seed", "5"});
  setenv("FILTRA_SEED", "nope", 1);
  const Run bad = run({"fuzz", "--atoms", "2", "--cases", "20"});
  unsetenv("FILTRA_SEED");
  CHECK(env.out == plain.out);
  CHECK(bad.code == 2);
}

TEST_CASE("check prop2 on the bundled file") {
  const Run r = run({"check", "prop2", source("data/detective.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("clause 2 at E = {a}: E' = {a}") != std::string::npos);
}

TEST_CASE("check agm on a mutated table") {
  const std::string path = write_mutated_table();
  const Run r = run({"check", "agm", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] AGM2") != std::string::npos);
  CHECK(r.out.find("E = {w2}") != std::string::npos);
  const Run subset = run({"check", "agm", path, "--postulates", "3-8"});
  CHECK(subset.out.find("AGM2") == std::string::npos);
  const Run json = run({"--json", "check", "agm", path});
  CHECK(json.code == 1);
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["verdict"] == "fail");
  CHECK(parsed["checks"][1]["id"] == "AGM2");
  CHECK(parsed["checks"][1]["witnesses"][0]["points"] == "{w2}");
  CHECK(parsed["checks"][1]["witnesses"][0]["formula"] == "p & ~q");
  std::filesystem::remove(path);
}

TEST_CASE("build filtered then check it") {
  const std::string out = temp("filtered.json");
  const Run b = run({"build", "filtered", source("data/detective.json"), "-o", out});
  CHECK(b.code == 0);
  const Run c = run({"check", "filtered", out});
  CHECK(c.code == 0);
  const Scenario s = load_scenario(out);
  REQUIRE(s.table.has_value());
  CHECK(s.table->entries.at("a") == IdList{"a", "b", "c"});
  CHECK(run({"validate", out}).code == 0);
  std::filesystem::remove(out);

  const std::string mutated = write_mutated_table();
  const Run refused = run({"build", "filtered", mutated, "-o", out});
  CHECK(refused.code == 1);
  CHECK(refused.out.find("star.AGM2") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(out));
  std::filesystem::remove(mutated);
}

TEST_CASE("oracle, rationalize and validate on the bundled file") {
  const Run o = run({"oracle", "def6", source("data/detective.json")});
  CHECK(o.code == 0);
  CHECK(o.out.find("def6") != std::string::npos);
  CHECK(run({"oracle", "def6", source("data/detective.json"), "--atoms", "1"}).code == 0);
  const Run r = run({"rationalize", source("data/detective.json")});
  CHECK(r.code == 0);
  CHECK(run({"validate", source("data/detective.json")}).code == 0);
}

TEST_CASE("inconsistent structure is reported with a counter-model") {
  const std::string path = temp("bad_gcs.json");
  std::ofstream(path) << R"({"atoms": [], "states": [{"id": "s1"}, {"id": "s2"}, {"id": "s3"}],
    "gcs": {"credible": [["s1", "s2", "s3"]], "allowable": [["s2"]], "rejected": [[]],
            "f": {"": ["s1", "s2"], "s1,s2,s3": ["s1", "s2"], "s2": ["s2"]}}})";
  const Run p = run({"check", "prop2", path});
  CHECK(p.code == 1);
  CHECK(p.out.find("[FAIL] 1b") != std::string::npos);
  const Run o = run({"oracle", "def6", path});
  CHECK(o.code == 1);
  CHECK(o.out.find("counter-model") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "prop2"}).code == 2);
  const Run missing = run({"check", "prop2", temp("nowhere.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  CHECK(run({"fuzz", "--cases", "lots"}).code == 2);
  CHECK(run({"fuzz", "--atoms", "2", "--cases", "all"}).code == 2);
  CHECK(run({"fuzz", "--atoms", "9", "--cases", "5"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const std::string path = temp("bad_key.json");
  std::ofstream(path) << R"({"atoms": [], "states": [{"id": "a"}, {"id": "b"}],
    "gcs": {"credible": [["a", "b"]], "rejected": [[]], "f": {"b,a": ["a"], "": ["a"]}}})";
  const Run key = run({"check", "prop2", path});
  CHECK(key.code == 2);
  CHECK(key.err.find("use \"a,b\"") != std::string::npos);
  std::filesystem::remove(path);
}
