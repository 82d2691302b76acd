#include "fanchar/fan/polytope.hpp"

#include <algorithm>
#include <set>

#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"
#include "fanchar/exact/lp.hpp"

namespace fanchar {

namespace {

bool in_convex_hull(const std::vector<QVector>& pts, const QVector& v, std::size_t dim) {
  if (pts.empty()) return false;
  QMatrix a(dim + 1, pts.size());
  QVector b(dim + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t r = 0; r < dim; ++r) a(r, i) = pts[i][r];
    a(dim, i) = 1;
  }
  for (std::size_t r = 0; r < dim; ++r) b[r] = v[r];
  b[dim] = 1;
  return nonnegative_solution(a, b).has_value();
}

std::size_t affine_rank(const std::vector<QVector>& pts, std::size_t dim) {
  if (pts.size() < 2) return 0;
  std::vector<QVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank(QMatrix::from_rows(diffs, dim));
}

// Next k-subset of {0..n-1} in lex order; false when exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t k = pick.size();
  std::size_t i = k;
  while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++pick[i - 1];
  for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  return pick;
}

}  // namespace

Polytope make_polytope(AmbientSpace space, std::vector<QVector> points) {
  const std::size_t d = space.dim();
  for (const auto& p : points) {
    if (p.size() != d) throw DimensionError("point has wrong dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<QVector> kept;
  std::vector<bool> dropped(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i && !dropped[j]) others.push_back(points[j]);
    }
    if (in_convex_hull(others, points[i], d)) {
      dropped[i] = true;
    } else {
      kept.push_back(points[i]);
    }
  }
  Polytope p{std::move(space), std::move(kept), 0};
  p.affine_dim = affine_rank(p.vertices, d);
  return p;
}

std::vector<Facet> facets(const Polytope& p) {
  const std::size_t d = p.space.dim();
  const std::size_t n = p.vertices.size();
  if (p.affine_dim != d || d == 0) throw DimensionError("polytope is not full-dimensional");
  std::vector<Facet> out;
  std::set<std::vector<std::size_t>> seen;
  auto pick = first_combination(d);
  do {
    std::vector<QVector> rows;
    for (std::size_t i = 1; i < d; ++i) rows.push_back(p.vertices[pick[i]] - p.vertices[pick[0]]);
    std::vector<QVector> ker;
    if (rows.empty()) {
      ker.push_back(unit_vector(1, 0));
    } else {
      const QMatrix m = QMatrix::from_rows(rows, d);
      if (rank(m) != d - 1) continue;
      ker = kernel(m);
    }
    QVector a = ker.front();
    Rational c = dot(a, p.vertices[pick[0]]);
    bool above = false;
    bool below = false;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = (dot(a, p.vertices[i]) - c).sign();
      above |= s > 0;
      below |= s < 0;
      if (s == 0) tight.push_back(i);
    }
    if (above && below) continue;
    if (above) {
      a = -a;
      c = -c;
    }
    if (!seen.insert(tight).second) continue;
    const QVector prim = primitive_direction(a);
    // a and prim differ by a positive factor; rescale the offset with it.
    std::size_t k = 0;
    while (a[k].is_zero()) ++k;
    out.push_back({prim, c * prim[k] / a[k], std::move(tight)});
  } while (next_combination(pick, n));
  return out;
}

Fan central_fan(const Polytope& p) {
  const auto fs = facets(p);
  for (const auto& f : fs) {
    if (f.offset.sign() <= 0) throw PreconditionError("origin is not in the interior of the polytope");
  }
  std::vector<std::vector<std::size_t>> maximal;
  for (const auto& f : fs) maximal.push_back(f.vertices);
  return Fan::from_maximal_cones(p.space, p.vertices, maximal);
}

Fan normal_fan(const Polytope& p) {
  const auto fs = facets(p);
  std::vector<QVector> rays;
  for (const auto& f : fs) rays.push_back(primitive_direction(p.space.dual_vector(f.normal)));
  std::vector<std::vector<std::size_t>> maximal(p.vertices.size());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (auto v : fs[j].vertices) maximal[v].push_back(j);
  }
  return Fan::from_maximal_cones(p.space, std::move(rays), maximal);
}

std::vector<QVector> vertices_of_inequalities(const std::vector<QVector>& a, const QVector& b, std::size_t dim) {
  if (a.size() != b.size()) throw DimensionError("inequality count mismatch");
  std::set<QVector> found;
  if (a.size() < dim) return {};
  auto pick = first_combination(dim);
  do {
    std::vector<QVector> rows;
    QVector rhs;
    for (auto i : pick) {
      rows.push_back(a[i]);
      rhs.push_back(b[i]);
    }
    const QMatrix m = QMatrix::from_rows(rows, dim);
    if (rank(m) != dim) continue;
    auto x = solve(m, rhs);
    FANCHAR_ASSERT(x.has_value(), "full-rank system without solution");
    bool feasible = true;
    for (std::size_t i = 0; i < a.size() && feasible; ++i) feasible = dot(a[i], *x) <= b[i];
    if (feasible) found.insert(*x);
  } while (next_combination(pick, a.size()));
  return {found.begin(), found.end()};
}

Polytope cross_polytope(std::size_t d) {
  std::vector<QVector> pts;
  for (std::size_t i = 0; i < d; ++i) {
    pts.push_back(unit_vector(d, i));
    pts.push_back(-unit_vector(d, i));
  }
  return make_polytope(AmbientSpace::euclidean(d), std::move(pts));
}

Polytope cube(std::size_t d) {
  std::vector<QVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    QVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? Rational(1) : Rational(-1);
    pts.push_back(std::move(v));
  }
  return make_polytope(AmbientSpace::euclidean(d), std::move(pts));
}

Fan cross_polytope_fan(std::size_t d) {
  // Rays ordered e1..ed, −e1..−ed; a cone is any choice of at most one sign
  // per coordinate.
  std::vector<QVector> rays;
  for (std::size_t i = 0; i < d; ++i) rays.push_back(unit_vector(d, i));
  for (std::size_t i = 0; i < d; ++i) rays.push_back(-unit_vector(d, i));
  std::vector<std::vector<std::size_t>> maximal;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back((mask >> i) & 1 ? d + i : i);
    maximal.push_back(std::move(c));
  }
  return Fan::from_maximal_cones(AmbientSpace::euclidean(d), std::move(rays), maximal);
}

}  // namespace fanchar
