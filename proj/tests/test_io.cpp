#include <doctest.h>

#include <filesystem>

#include "fanchar/corpus/corpus.hpp"
#include "fanchar/error.hpp"
#include "fanchar/io/json_io.hpp"

using namespace fanchar;

TEST_CASE("fan round trip") {
  for (const auto& name : corpus_fan_names()) {
    CAPTURE(name);
    const Fan f = corpus_fan(name);
    const Json j = to_json(f);
    const Fan g = fan_from_json(Json::parse(j.dump()));
    CHECK(g.space() == f.space());
    CHECK(g.rays() == f.rays());
    CHECK(g.cones() == f.cones());
    CHECK(to_json(g).dump() == j.dump());
  }
}

TEST_CASE("polytope round trip") {
  for (const auto& name : corpus_polytope_names()) {
    const Polytope p = corpus_polytope(name);
    const Polytope q = polytope_from_json(to_json(p));
    CHECK(q.vertices == p.vertices);
    CHECK(q.space == p.space);
  }
}

TEST_CASE("group files") {
  const Json roots = Json::parse(R"({"simple_roots": [["1", "-1"], ["0", "1"]]})");
  const LoadedGroup b2 = group_from_json(roots);
  REQUIRE(b2.roots.has_value());
  CHECK(b2.group.order() == 8);
  const Json gens = Json::parse(R"({"generators": [[["0", "1"], ["1", "0"]]]})");
  const LoadedGroup swap = group_from_json(gens);
  CHECK_FALSE(swap.roots.has_value());
  CHECK(swap.group.order() == 2);
  const LoadedGroup again = group_from_json(group_to_json(b2.group));
  CHECK(again.group.order() == 8);
  const LoadedGroup rs = group_from_json(to_json(type_a(3)));
  CHECK(rs.group.order() == 24);
}

TEST_CASE("rationals are strings") {
  CHECK(to_json(Rational(-3, 6)) == Json("-1/2"));
  CHECK(rational_from_json(Json("4/6")) == Rational(2, 3));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
}

TEST_CASE("malformed input is an input error") {
  CHECK_THROWS_AS(fan_from_json(Json::parse(R"({"dim": 2})")), InputError);
  CHECK_THROWS_AS(fan_from_json(Json::parse(R"({"dim": 2, "rays": [["1"]], "maximal_cones": [[0]]})")),
                  DimensionError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"nothing": 1})")), InputError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("hybrid fan file carries labels and cells") {
  const Json j = to_json(build_hybrid_naive(corpus_fan("quadrant"), type_b(2)));
  CHECK(j["labels"].size() == j["rays"].size());
  CHECK(j["cells"].size() == j["maximal_cones"].size());
  CHECK(j["labels"][0]["kind"] == "rho");
  const Fan back = fan_from_json(j);
  CHECK(f_vector(back) == std::vector<std::size_t>{1, 3, 3});
}

TEST_CASE("files on disk") {
  const auto path = std::filesystem::temp_directory_path() / "fanchar_io_test.json";
  write_json_file(path.string(), to_json(corpus_fan("coxeter-B2")));
  const Fan f = fan_from_json(read_json_file(path.string()));
  CHECK(f_vector(f) == std::vector<std::size_t>{1, 8, 8});
  std::filesystem::remove(path);
}
