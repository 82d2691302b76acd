#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"
#include "fanchar/exact/lp.hpp"
#include "fanchar/fan/fan.hpp"

using namespace fanchar;

namespace {

// Permutation expansion, independent of the elimination code.
Rational leibniz(const QMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rational total;
  do {
    Rational term(1);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      term *= m(i, p[i]);
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

QMatrix random_matrix(RandomRationals& rng, std::size_t n) {
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(rng.vector(n));
  return QMatrix::from_rows(rows, n);
}

}  // namespace

TEST_CASE("rational parsing and normal form") {
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK_THROWS_AS(Rational::parse("6/-4"), InputError);
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
}

TEST_CASE("rank, kernel and solve") {
  const QMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(m * ker[0]));
  const auto x = solve(m, make_vector({4, 8, 2}));
  REQUIRE(x.has_value());
  CHECK(m * *x == make_vector({4, 8, 2}));
  CHECK_FALSE(solve(m, make_vector({1, 0, 0})).has_value());
}

TEST_CASE("determinant and inverse agree with the permutation expansion") {
  RandomRationals rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const QMatrix m = random_matrix(rng, 4);
    CHECK(determinant(m) == leibniz(m));
    if (!determinant(m).is_zero()) CHECK(m * inverse(m) == QMatrix::identity(4));
  }
}

TEST_CASE("characteristic polynomial matches pointwise determinants") {
  RandomRationals rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const QMatrix m = random_matrix(rng, 4);
    const QPoly p = det_poly(m);
    CHECK(p.degree() == 4);
    for (long t = -2; t <= 3; ++t) {
      CHECK(p.evaluate(Rational(t)) == leibniz(Rational(t) * QMatrix::identity(4) - m));
    }
    CHECK(det_one_minus_t(m) == p.reversed(4));
  }
}

TEST_CASE("characteristic polynomial of a block matrix factors") {
  const QMatrix a{{0, -1}, {1, 0}};
  const QMatrix b{{2}};
  QMatrix m(3, 3);
  m(0, 1) = -1;
  m(1, 0) = 1;
  m(2, 2) = 2;
  CHECK(det_poly(m) == det_poly(a) * det_poly(b));
  CHECK(det_poly(a) == (QPoly{1, 0, 1}));
}

TEST_CASE("quotient and restriction blocks") {
  // Swap of coordinates preserves the diagonal line.
  const QMatrix swap{{0, 1}, {1, 0}};
  const std::vector<QVector> line{make_vector({1, 1})};
  CHECK(restrict_matrix(swap, line) == QMatrix{{1}});
  CHECK(quotient_matrix(swap, line) == QMatrix{{-1}});
}

TEST_CASE("polynomial division") {
  const QPoly num = QPoly{-1, 0, 0, 1};
  const QPoly den = QPoly{-1, 1};
  CHECK(poly_exact_div(num, den) == (QPoly{1, 1, 1}));
  CHECK(poly_is_palindromic(QPoly{1, 4, 1}, 2));
  CHECK_FALSE(poly_is_palindromic(QPoly{1, 4, 1}, 3));
  const auto inv = series_inverse(QPoly{1, -1}, 5);
  CHECK(std::all_of(inv.begin(), inv.end(), [](const Rational& r) { return r == Rational(1); }));
}

TEST_CASE("cone membership through the simplex") {
  const std::vector<QVector> quad{make_vector({1, 0}), make_vector({0, 1})};
  CHECK(in_cone(quad, make_vector({2, 3}), 2));
  CHECK_FALSE(in_cone(quad, make_vector({-1, 3}), 2));
  CHECK(in_relative_interior(quad, make_vector({1, 1}), 2));
  CHECK_FALSE(in_relative_interior(quad, make_vector({1, 0}), 2));
  CHECK(is_pointed(quad, 2));
  CHECK_FALSE(is_pointed({make_vector({1, 0}), make_vector({-1, 0})}, 2));
  const std::vector<QVector> gens{make_vector({1, 0}), make_vector({1, 1}), make_vector({0, 1})};
  CHECK(irredundant_generators(gens, 2) == std::vector<std::size_t>{0, 2});
  CHECK(relative_interiors_meet({make_vector({1, 0}), make_vector({1, 2})},
                                {make_vector({0, 1}), make_vector({1, 1})}, 2));
  CHECK_FALSE(relative_interiors_meet(quad, {make_vector({-1, 0}), make_vector({0, 1})}, 2));
}
