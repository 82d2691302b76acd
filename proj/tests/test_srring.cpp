#include <doctest.h>

#include "fanchar/charformula/charformula.hpp"
#include "fanchar/corpus/corpus.hpp"
#include "fanchar/error.hpp"
#include "fanchar/srring/srring.hpp"

using namespace fanchar;

namespace {

// Count exponent vectors of total degree k whose support is a cone.
std::size_t brute_dimension(const Fan& f, std::size_t k) {
  std::size_t count = 0;
  std::vector<unsigned> e(f.num_rays(), 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == e.size()) {
      e[pos] = static_cast<unsigned>(left);
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i]) support.push_back(i);
      }
      if (f.find_cone(support)) ++count;
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      e[pos] = static_cast<unsigned>(x);
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, k);
  return count;
}

std::vector<Rational> hilbert_times_inverse_power(const std::vector<std::size_t>& q, std::size_t d, std::size_t n) {
  // Coefficients of Σ q_j t^j / (1 − t)^d up to t^n.
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j < q.size() && j <= k; ++j) {
      // C(k − j + d − 1, d − 1)
      Rational c(1);
      for (std::size_t i = 1; i < d; ++i) c = c * Rational(static_cast<long>(k - j + i)) / Rational(static_cast<long>(i));
      out[k] += Rational(static_cast<long>(q[j])) * c;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("graded pieces of the face ring") {
  for (const char* name : {"quadrant", "coxeter-A2", "octant3"}) {
    const Fan f = corpus_fan(name);
    for (std::size_t k = 0; k <= 4; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const std::size_t brute = brute_dimension(f, k);
      CHECK(graded_dimension(f, k) == brute);
      CHECK(graded_basis(f, k).monomials.size() == brute);
    }
  }
}

TEST_CASE("linear system of parameters") {
  const QMatrix l = lsop(corpus_fan("quadrant"));
  CHECK(l.rows() == 2);
  CHECK(l.cols() == 4);
  CHECK(l == QMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}});
}

TEST_CASE("Artinian dimensions match the h-vector") {
  struct Row {
    const char* fan;
    std::vector<std::size_t> dims;
  };
  for (const Row& r : {Row{"line", {1, 1}}, Row{"quadrant", {1, 2, 1}}, Row{"coxeter-A2", {1, 4, 1}},
                       Row{"coxeter-B2", {1, 6, 1}}, Row{"coxeter-A3", {1, 11, 11, 1}},
                       Row{"cross4", {1, 4, 6, 4, 1}}}) {
    CAPTURE(r.fan);
    const Fan f = corpus_fan(r.fan);
    const ArtinianTable tab = artinian_table(f);
    CHECK(tab.quotient_dims() == r.dims);
    const QPoly h = h_polynomial(f);
    for (std::size_t i = 0; i < r.dims.size(); ++i) CHECK(h.coeff(i) == Rational(static_cast<long>(r.dims[i])));
  }
}

TEST_CASE("Hilbert identity through degree d+3") {
  for (const char* name : {"quadrant", "coxeter-A2", "coxeter-B2", "octant3", "coxeter-A3"}) {
    CAPTURE(name);
    const Fan f = corpus_fan(name);
    const ArtinianTable tab = artinian_table(f, 3);
    const std::size_t d = f.dim();
    const auto predicted = hilbert_times_inverse_power(tab.quotient_dims(), d, d + 3);
    for (std::size_t k = 0; k <= d + 3; ++k) {
      CHECK(predicted[k] == Rational(static_cast<long>(tab.ambient_dims[k])));
      CHECK(tab.ambient_dims[k] == graded_dimension(f, k));
    }
  }
}

TEST_CASE("freeness shadow: ambient traces factor through the quotient") {
  for (const auto& [fan, group] : std::vector<std::pair<const char*, const char*>>{
           {"quadrant", "B2"}, {"octant3", "B3"}, {"coxeter-A3", "A3"}, {"coxeter-B2", "B2[1]"}}) {
    CAPTURE(fan);
    CAPTURE(group);
    const RootSystem rs = corpus_root_system(group);
    const FanAction a = bind_action(rs.group, corpus_fan(fan));
    const ArtinianTable tab = artinian_table(a, 3);
    const std::size_t d = a.fan().dim();
    for (std::size_t g = 0; g < rs.group.order(); ++g) {
      const QMatrix& m = rs.group.element(g);
      for (std::size_t k = 0; k <= d + 3; ++k) {
        Rational sum;
        for (std::size_t j = 0; j <= std::min(k, d); ++j) sum += tab.pieces[j].traces[g] * sym_trace(m, k - j);
        CHECK(sum == tab.ambient_traces[k][g]);
      }
    }
  }
}

TEST_CASE("socle and volume element") {
  for (const char* name : {"quadrant", "coxeter-A2", "coxeter-B3", "cross4"}) {
    CAPTURE(name);
    const Fan f = corpus_fan(name);
    const ArtinianTable tab = artinian_table(f);
    CHECK(socle_check(tab));
    CHECK(volume_element_check(f, tab).ok);
  }
}

TEST_CASE("oracle characters on the quadrant under B2") {
  const RootSystem rs = type_b(2);
  const FanAction a = bind_action(rs.group, corpus_fan("quadrant"));
  const ArtinianTable tab = artinian_table(a);
  for (std::size_t g = 0; g < rs.group.order(); ++g) {
    const QMatrix& m = rs.group.element(g);
    const QPoly p = oracle_character(tab, g);
    // Coordinate swaps and quarter turns act as 1 + t²; diagonal elements
    // act on the degree-one piece with trace 2.
    const bool diagonal = m(0, 1).is_zero();
    CAPTURE(to_string(m));
    CHECK(p == (diagonal ? QPoly{1, 2, 1} : QPoly{1, 0, 1}));
  }
}

TEST_CASE("oracle requires a complete simplicial fan") {
  CHECK_THROWS_AS(artinian_table(corpus_fan("octahedron-normal")), PreconditionError);
}
