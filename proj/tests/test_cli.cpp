#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fanchar/cli/cli.hpp"

using namespace fanchar;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fanchar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const Json& j) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  write_json_file(path, j);
  return path;
}

}  // namespace

TEST_CASE("hpoly on a fan file") {
  const std::string path = temp_file("fanchar_quadrant.fan", to_json(corpus_fan("quadrant")));
  const Run r = run({"hpoly", path});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out) == Json::parse(R"({"h": ["1", "2", "1"]})"));
  std::filesystem::remove(path);
}

TEST_CASE("verify with the oracle") {
  const Run r = run({"verify", "octant3", "sign3", "--oracle"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  const Json expected = Json::parse(R"(["1", "3", "3", "1"])");
  for (const char* key : {"average", "oracle"}) CHECK(j["invariant_poincare"][key] == expected);
  CHECK(j["socle"] == true);
}

TEST_CASE("hybrid of the octahedron normal fan") {
  const std::string out = (std::filesystem::temp_directory_path() / "fanchar_octa_hybrid.fan").string();
  const Run r = run({"hybrid", "octahedron-normal", "sign3", "--builder", "naive", "--out", out});
  REQUIRE(r.code == kExitOk);
  const Json j = read_json_file(out);
  CHECK(j["rays"].size() == 4);
  CHECK(j["maximal_cones"].size() == 4);
  CHECK(Json::parse(r.out)["h"] == Json::parse(R"(["1", "1", "1", "1"])"));
  std::filesystem::remove(out);
}

TEST_CASE("exit codes") {
  CHECK(run({"hpoly", "no-such-fan"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"invariants", "quadrant", "B2", "--route", "sideways"}).code == kExitInput);
  // A swap-only group has no simple roots to build a hybrid fan from.
  const std::string group = temp_file("fanchar_swap.group", Json::parse(R"({"generators": [[["0","1"],["1","0"]]]})"));
  CHECK(run({"hybrid", "quadrant", group}).code == kExitInput);
  std::filesystem::remove(group);
  // Overlapping cones.
  const std::string bad = temp_file(
      "fanchar_bad.fan",
      Json::parse(R"({"dim": 2, "rays": [["1","0"],["1","2"],["0","1"],["1","1"]], "maximal_cones": [[0,1],[2,3]]})"));
  CHECK(run({"validate", bad}).code == kExitInput);
  std::filesystem::remove(bad);
  CHECK(run({"verify", "octahedron-normal", "sign3"}).code == kExitInput);
  CHECK(run({"examples", "quadrant-b2"}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("invariance failure is an input error") {
  const std::string f = temp_file(
      "fanchar_lopsided.fan",
      Json::parse(R"({"dim": 2, "rays": [["1","0"],["1","1"],["0","1"],["-1","0"],["0","-1"]],
                      "maximal_cones": [[0,1],[1,2],[2,3],[3,4],[0,4]]})"));
  CHECK(run({"echar", f, "B2"}).code == kExitInput);
  std::filesystem::remove(f);
}

TEST_CASE("reports are deterministic") {
  const Run a = run({"echar", "coxeter-B2", "B2", "--all"});
  const Run b = run({"echar", "coxeter-B2", "B2", "--all"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const Run c = run({"--format", "text", "invariants", "quadrant", "B2"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("average: 1 1 1") != std::string::npos);
}

TEST_CASE("class selection") {
  const Run r = run({"echar", "quadrant", "B2", "--class", "0"});
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["value"] == Json::parse(R"(["1", "2", "1"])"));
  CHECK(run({"echar", "quadrant", "B2", "--class", "99"}).code == kExitInput);
}
