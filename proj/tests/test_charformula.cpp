#include <doctest.h>

#include <sstream>

#include "fanchar/charformula/charformula.hpp"
#include "fanchar/corpus/corpus.hpp"
#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"

using namespace fanchar;

TEST_CASE("h-polynomials") {
  CHECK(h_polynomial(corpus_fan("line")) == (QPoly{1, 1}));
  CHECK(h_polynomial(corpus_fan("quadrant")) == (QPoly{1, 2, 1}));
  CHECK(h_polynomial(corpus_fan("coxeter-A2")) == (QPoly{1, 4, 1}));
  CHECK(h_polynomial(corpus_fan("coxeter-A3")) == (QPoly{1, 11, 11, 1}));
  CHECK(h_polynomial(corpus_fan("coxeter-B3")) == (QPoly{1, 23, 23, 1}));
}

TEST_CASE("h-polynomial warns on non-simplicial fans") {
  std::ostringstream warn;
  h_polynomial(corpus_fan("octahedron-normal"), &warn);
  CHECK_FALSE(warn.str().empty());
}

TEST_CASE("symmetric and exterior power traces") {
  const QMatrix id = QMatrix::identity(3);
  CHECK(sym_trace(id, 2) == Rational(6));
  CHECK(sym_trace(id, 4) == Rational(15));
  const QMatrix swap{{0, 1}, {1, 0}};
  // Sym^k of a transposition fixes the monomials x^a y^a only.
  for (std::size_t k = 0; k < 6; ++k) CHECK(sym_trace(swap, k) == Rational(k % 2 ? 0 : 1));
  for (const char* name : {"A2", "A3", "B2", "B3", "B4", "sign3"}) {
    CAPTURE(name);
    const MatrixGroup& g = corpus_root_system(name).group;
    for (std::size_t e = 0; e < g.order(); ++e) {
      const QMatrix& m = g.element(e);
      CHECK(ext_trace(m, 1) == m.trace());
      CHECK(ext_trace(m, m.rows()) == determinant(m));
      CHECK(ext_trace(m, 0) == Rational(1));
      CHECK(ext_trace_check(m));
      CHECK(sym_trace_check(m, m.rows() + 3));
    }
  }
}

TEST_CASE("character routes agree per class") {
  for (const auto& [fan, group] : std::vector<std::pair<const char*, const char*>>{
           {"quadrant", "B2"}, {"octant3", "sign3"}, {"coxeter-A3", "A3[0,2]"}, {"coxeter-B3", "B3"}}) {
    CAPTURE(fan);
    CAPTURE(group);
    const RootSystem rs = corpus_root_system(group);
    const FanAction a = bind_action(rs.group, corpus_fan(fan));
    const GradedCharacter c = equivariant_h_series(a);
    CHECK(c.values.size() == rs.group.classes().size());
    CHECK(c.values.front() == h_polynomial(a.fan()));
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      const std::size_t g = c.representatives[k];
      CHECK(char_fixed_cones(a, g) == c.values[k]);
      CHECK(char_maschke(a, g) == c.values[k]);
      CHECK(poly_is_palindromic(c.values[k], a.fan().dim()));
    }
  }
}

TEST_CASE("characters are class functions") {
  const RootSystem rs = type_b(3);
  const FanAction a = bind_action(rs.group, corpus_fan("coxeter-B3"));
  for (const auto& cls : rs.group.classes()) {
    const QPoly first = char_fixed_cones(a, cls.front());
    for (auto g : cls) CHECK(char_fixed_cones(a, g) == first);
  }
}

TEST_CASE("invariant Poincaré routes") {
  struct Row {
    const char* fan;
    const char* group;
    QPoly expected;
  };
  for (const Row& r : {Row{"quadrant", "B2", {1, 1, 1}}, Row{"octant3", "sign3", {1, 3, 3, 1}},
                       Row{"octant3", "B3", {1, 1, 1, 1}}, Row{"coxeter-A2", "A2[0]", {1, 3, 1}},
                       Row{"quadrant", "B2[]", {1, 2, 1}}}) {
    CAPTURE(r.fan);
    CAPTURE(r.group);
    const RootSystem rs = corpus_root_system(r.group);
    const FanAction a = bind_action(rs.group, corpus_fan(r.fan));
    CHECK(invariant_poincare_avg(a) == r.expected);
    CHECK(invariant_poincare_orbit(a, rs) == r.expected);
    CHECK(invariant_poincare_closed(a, rs) == r.expected);
  }
}

TEST_CASE("formulas need a complete simplicial fan") {
  const FanAction a = bind_action(sign_system(3).group, corpus_fan("octahedron-normal"));
  CHECK_THROWS_AS(char_fixed_cones(a, 0), PreconditionError);
}
