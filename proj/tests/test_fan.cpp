#include <doctest.h>

#include "fanchar/corpus/corpus.hpp"
#include "fanchar/error.hpp"
#include "fanchar/exact/lp.hpp"
#include "fanchar/fan/fan.hpp"
#include "fanchar/fan/polytope.hpp"

using namespace fanchar;

namespace {

Fan plane_fan(std::vector<QVector> rays, std::vector<std::vector<std::size_t>> cones) {
  return Fan::from_maximal_cones(AmbientSpace::euclidean(2), std::move(rays), cones);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("quadrant fan") {
  const Fan f = corpus_fan("quadrant");
  CHECK(validate_fan(f).ok());
  CHECK(is_simplicial(f));
  CHECK(is_complete(f));
  CHECK(f_vector(f) == std::vector<std::size_t>{1, 4, 4});
}

TEST_CASE("overlapping cones are rejected") {
  const Fan f = plane_fan({make_vector({1, 0}), make_vector({1, 2}), make_vector({0, 1}), make_vector({1, 1})},
                          {{0, 1}, {2, 3}});
  const auto report = validate_fan(f);
  CHECK_FALSE(report.ok());
  bool saw_intersection = false;
  for (const auto& v : report.violations) saw_intersection |= v.kind == Violation::Kind::kIntersection;
  CHECK(saw_intersection);
}

TEST_CASE("non-pointed cone is rejected") {
  const Fan f = plane_fan({make_vector({1, 0}), make_vector({-1, 0})}, {{0, 1}});
  CHECK_FALSE(validate_fan(f).ok());
}

TEST_CASE("incomplete fan has a witness") {
  const Fan f = plane_fan({make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, 0})}, {{0, 1}, {1, 2}});
  CHECK(validate_fan(f).ok());
  const auto c = check_completeness(f);
  CHECK_FALSE(c.complete);
  CHECK_FALSE(c.witness.empty());
  CHECK_FALSE(point_locate(f, make_vector({1, -1})).has_value());
}

TEST_CASE("cross-polytope fans have binomial f-vectors") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const Fan f = cross_polytope_fan(d);
    const auto fv = f_vector(f);
    REQUIRE(fv.size() == d + 1);
    for (std::size_t i = 0; i <= d; ++i) CHECK(fv[i] == binomial(d, i) << i);
    CHECK(is_complete(f));
  }
}

TEST_CASE("point location lands in the relative interior") {
  const Fan f = corpus_fan("coxeter-B3");
  RandomRationals rng(3);
  for (int i = 0; i < 30; ++i) {
    const QVector v = rng.vector(3);
    const auto c = point_locate(f, v);
    REQUIRE(c.has_value());
    CHECK(in_relative_interior(f.generators(*c), v, 3));
  }
  const auto origin = point_locate(f, zero_vector(3));
  REQUIRE(origin.has_value());
  CHECK(f.cone(*origin).rays.empty());
}

TEST_CASE("octahedron facets and fans") {
  const Polytope p = cross_polytope(3);
  const auto fs = facets(p);
  CHECK(fs.size() == 8);
  for (const auto& facet : fs) CHECK(facet.vertices.size() == 3);
  const Fan central = central_fan(p);
  CHECK(f_vector(central) == std::vector<std::size_t>{1, 6, 12, 8});
  const Fan normal = normal_fan(p);
  CHECK(f_vector(normal) == std::vector<std::size_t>{1, 8, 12, 6});
  CHECK(validate_fan(normal).ok());
  CHECK(is_complete(normal));
  CHECK_FALSE(is_simplicial(normal));
}

TEST_CASE("interior points are pruned from polytopes") {
  const Polytope p = make_polytope(AmbientSpace::euclidean(2),
                                   {make_vector({0, 0}), make_vector({1, 0}), make_vector({0, 1}),
                                    make_vector({1, 1}), make_vector({1, 2}), make_vector({2, 2})});
  CHECK(p.vertices.size() == 5);
}

TEST_CASE("cube and its normal fan") {
  const Fan f = normal_fan(cube(3));
  CHECK(f_vector(f) == std::vector<std::size_t>{1, 6, 12, 8});
  CHECK(is_simplicial(f));
}

TEST_CASE("rays are stored as primitive directions") {
  CHECK(primitive_direction(make_vector({2, 4})) == make_vector({1, 2}));
  CHECK(primitive_direction(QVector{Rational(1, 2), Rational(1, 3)}) == make_vector({3, 2}));
}
