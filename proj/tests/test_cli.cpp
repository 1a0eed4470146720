#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "helpers.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ribbon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = ribbon::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ribbon_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* kB3Toroidal =
    R"({"vertices":["a","b"],"edges":[{"id":"e1","ends":["a","b"]},{"id":"e2","ends":["a","b"]},)"
    R"({"id":"e3","ends":["a","b"]}],"rotation":{"a":["e1","e2","e3"],"b":["e1","e2","e3"]}})";

}  // namespace

TEST_CASE("inspect") {
  const auto p2 = run({"inspect", "builtin:P2"});
  REQUIRE(p2.code == 0);
  CHECK(p2.json()["genus"] == 0);
  CHECK(p2.json()["trees"] == 1);
  CHECK(p2.json()["group"] == nlohmann::json::array());

  const auto planar = run({"inspect", "builtin:B3"});
  CHECK(planar.json()["genus"] == 0);
  CHECK(planar.json()["trees"] == 3);
  CHECK(planar.json()["group"] == nlohmann::json::array({3}));

  const auto toroidal = run({"inspect", temp_file("b3t.json", kB3Toroidal)});
  REQUIRE(toroidal.code == 0);
  CHECK(toroidal.json()["genus"] == 1);
  CHECK(toroidal.json()["planar"] == false);
  CHECK(toroidal.json()["group"] == nlohmann::json::array({3}));
  CHECK_FALSE(toroidal.err.empty());
}

TEST_CASE("act") {
  const auto empty = run({"act", "builtin:K4", "--root", "a", "--tree", "e1,e2,e3"});
  REQUIRE(empty.code == 0);
  CHECK(empty.json()["tree"] == nlohmann::json::array({"e1", "e2", "e3"}));

  const auto step = run({"act", "builtin:B3", "--root", "b", "--divisor", R"({"a":1,"b":-1})", "--tree", "e1"});
  REQUIRE(step.code == 0);
  CHECK(step.json()["tree"] == nlohmann::json::array({"e2"}));

  // The Laplacian column of a in K4: 3a - b - c - d.
  const auto image = run({"act", "builtin:K4", "--root", "b", "--divisor", R"({"a":3,"b":-1,"c":-1,"d":-1})",
                          "--tree", "e1,e4,e6"});
  REQUIRE(image.code == 0);
  CHECK(image.json()["tree"] == nlohmann::json::array({"e1", "e4", "e6"}));

  const auto trace_path = temp_file("trace.jsonl", "");
  const auto traced = run({"act", "builtin:B3", "--root", "b", "--divisor", R"({"a":-1,"b":1})", "--tree", "e1",
                           "--trace", trace_path});
  REQUIRE(traced.code == 0);
  const auto untraced = run({"act", "builtin:B3", "--root", "b", "--divisor", R"({"a":-1,"b":1})", "--tree", "e1"});
  CHECK(traced.json() == untraced.json());
  std::ifstream in(trace_path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto step_json = nlohmann::json::parse(line);
    CHECK(step_json.contains("at"));
    CHECK(step_json.contains("rotor"));
    CHECK(step_json.contains("to"));
    ++lines;
  }
  CHECK(lines == 2);
}

TEST_CASE("act errors") {
  CHECK(run({"act", "builtin:B3", "--root", "b", "--divisor", R"({"a":1})", "--tree", "e1"}).code == 2);
  CHECK(run({"act", "builtin:B3", "--root", "b", "--tree", "e1,e2"}).code == 2);
  CHECK(run({"act", "builtin:B3", "--root", "z", "--tree", "e1"}).code == 2);
  const auto degree = run({"act", "builtin:B3", "--root", "b", "--divisor", R"({"a":2})", "--tree", "e1"});
  CHECK(degree.err.find("DegreeMismatch") != std::string::npos);
}

TEST_CASE("reversible and separating") {
  const auto path = temp_file("b3t_cycles.json", kB3Toroidal);
  const auto rev = run({"reversible", path, "--cycle", "e1@a,e2@b"});
  REQUIRE(rev.code == 0);
  CHECK(rev.json()["reversible"] == false);
  const auto sep = run({"separating", path, "--cycle", "e1@a,e2@b"});
  REQUIRE(sep.code == 0);
  CHECK(sep.json()["separating"] == false);
  CHECK(sep.json()["witness"].size() == 1);

  const auto planar = run({"separating", "builtin:B3", "--cycle", "e1,e2"});
  CHECK(planar.json()["separating"] == true);
  CHECK(planar.json()["witness"].is_null());
  CHECK(run({"reversible", "builtin:B3", "--cycle", "e1@a,e2@a"}).code == 2);
  CHECK(run({"reversible", "builtin:B3", "--cycle", "e1,e1"}).json()["reversible"] == true);
}

TEST_CASE("gen-rotations") {
  const auto all = run({"gen-rotations", "builtin:K4"});
  REQUIRE(all.code == 0);
  CHECK(all.json().size() == 16);
  const auto sampled = run({"gen-rotations", "builtin:K5", "--sample", "4", "--seed", "3"});
  CHECK(sampled.json().size() == 4);
  CHECK(sampled.out == run({"gen-rotations", "builtin:K5", "--sample", "4", "--seed", "3"}).out);
  CHECK(run({"gen-rotations", "builtin:K5", "--sample", "4"}).code == 2);
}

TEST_CASE("check") {
  const auto empty = run({"check", "--corpus", "builtin", "--checks", ""});
  CHECK(empty.code == 0);
  CHECK(empty.json()["graphs"].empty());

  const auto corpus = temp_file("corpus.json", R"({"checks": ["theorem1", "torsor"],
    "graphs": [{"builtin": "B3", "rotations": "all"}, {"builtin": "K5", "rotations": {"sample": 2, "seed": 1}}]})");
  const auto report = run({"check", "--corpus", corpus, "--jobs", "2"});
  REQUIRE(report.code == 0);
  const auto j = report.json();
  CHECK(j["graphs"].size() == 6);
  CHECK(j["theorem1_mismatches"] == 0);
  for (const auto& g : j["graphs"]) {
    CHECK(g["basepoint_independent"] == g["planar"]);
    CHECK(g.contains("counterexample") == !g["planar"].get<bool>());
  }
  CHECK(report.out == run({"check", "--corpus", corpus, "--jobs", "1"}).out);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"inspect"}).code == 2);
  CHECK(run({"inspect", "/nonexistent/graph.json"}).code == 2);
  const auto bad = run({"inspect", temp_file("bad.json", "{\n\"vertices\": [\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line") != std::string::npos);
  CHECK(run({"check", "--checks", "nonsense"}).code == 2);
  CHECK(run({"check", "--corpus", temp_file("bad_corpus.json", R"({"graphs": [{"builtin": "K5",
    "rotations": {"sample": 2}}]})")}).code == 2);
}
