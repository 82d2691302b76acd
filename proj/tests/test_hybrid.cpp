#include <doctest.h>

#include <set>

#include "fanchar/charformula/charformula.hpp"
#include "fanchar/corpus/corpus.hpp"
#include "fanchar/error.hpp"
#include "fanchar/hybrid/hybrid.hpp"

using namespace fanchar;

TEST_CASE("octahedron normal fan under the sign group") {
  const HybridFan h = build_hybrid_naive(corpus_fan("octahedron-normal"), sign_system(3));
  const std::set<QVector> rays(h.fan.rays().begin(), h.fan.rays().end());
  const std::set<QVector> expected{make_vector({1, 1, 1}), make_vector({-1, 0, 0}), make_vector({0, -1, 0}),
                                   make_vector({0, 0, -1})};
  CHECK(rays == expected);
  CHECK(h.fan.maximal_cones().size() == 4);
  const StructureReport s = check_structure(h);
  CHECK(s.valid);
  CHECK(s.complete);
  CHECK(s.simplicial);
  CHECK_FALSE(s.source_simplicial);
  CHECK(h_polynomial(h.fan) == (QPoly{1, 1, 1, 1}));
}

TEST_CASE("quadrant under B2") {
  const Fan f = corpus_fan("quadrant");
  const RootSystem rs = type_b(2);
  const HybridFan naive = build_hybrid_naive(f, rs);
  const HybridFan fast = build_hybrid_fast(f, rs);
  CHECK(same_hybrid(naive, fast));
  CHECK(f_vector(naive.fan) == std::vector<std::size_t>{1, 3, 3});
  CHECK(h_polynomial(naive.fan) == (QPoly{1, 1, 1}));
  std::size_t taus = 0;
  for (std::size_t r = 0; r < naive.labels.size(); ++r) {
    if (naive.labels[r].kind != HybridRay::Kind::kTau) continue;
    ++taus;
    CHECK(naive.fan.find_cone({r}).has_value());
  }
  CHECK(taus == 2);
}

TEST_CASE("trivial group leaves the fan alone") {
  const Fan f = corpus_fan("coxeter-A2");
  const HybridFan h = build_hybrid_naive(f, corpus_root_system("A2[]"));
  CHECK(f_vector(h.fan) == f_vector(f));
  CHECK(h_polynomial(h.fan) == h_polynomial(f));
}

TEST_CASE("point location through the Moreau split") {
  for (const auto& inst : std::vector<Instance>{{"quadrant", "B2"}, {"coxeter-A3", "A3[1]"}, {"octant3", "B3"}}) {
    CAPTURE(inst.fan);
    CAPTURE(inst.group);
    const RootSystem rs = corpus_root_system(inst.group);
    const HybridFan h = build_hybrid_fast(corpus_fan(inst.fan), rs);
    RandomRationals rng(99);
    for (int i = 0; i < 100; ++i) {
      const QVector v = rng.vector(rs.space.dim());
      CHECK(locate_in_hybrid(h, rs, v) == point_locate(h.fan, v));
    }
  }
}

TEST_CASE("theorem check on every reflection instance") {
  for (const auto& inst : reflection_instances()) {
    CAPTURE(inst.fan);
    CAPTURE(inst.group);
    const TheoremReport r = theorem_check(corpus_fan(inst.fan), corpus_root_system(inst.group), false);
    CHECK(r.all_equal());
    CHECK(r.hybrid_h.has_nonnegative_coefficients());
  }
}

TEST_CASE("quotient polytopes") {
  CHECK(polytopal_check(corpus_polytope("octahedron"), sign_system(3)));
  CHECK(polytopal_check(corpus_polytope("square"), sign_system(2)));
  CHECK(polytopal_check(corpus_polytope("hexagon"), type_a(2)));
  CHECK(polytopal_check(corpus_polytope("cube"), type_b(3)));
  const Polytope q = quotient_polytope(corpus_polytope("square"), sign_system(2));
  CHECK(q.vertices.size() == 4);
}

TEST_CASE("quotient polytope needs an invariant polytope") {
  const Polytope tri = make_polytope(AmbientSpace::euclidean(2),
                                     {make_vector({0, 0}), make_vector({1, 0}), make_vector({0, 1})});
  CHECK_THROWS_AS(quotient_polytope(tri, sign_system(2)), InvarianceError);
}
