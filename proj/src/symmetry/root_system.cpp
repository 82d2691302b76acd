#include "fanchar/symmetry/root_system.hpp"

#include <algorithm>
#include <set>

#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"

namespace fanchar {

RootSystem root_system(std::vector<QVector> simple_roots, const AmbientSpace& space, std::size_t cap) {
  const std::size_t d = space.dim();
  for (const auto& a : simple_roots) {
    if (a.size() != d) throw DimensionError("simple root has wrong dimension");
  }
  if (!simple_roots.empty() && rank(QMatrix::from_rows(simple_roots, d)) != simple_roots.size()) {
    throw RankError("simple roots are linearly dependent");
  }
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    for (std::size_t j = i + 1; j < simple_roots.size(); ++j) {
      if (space.inner(simple_roots[i], simple_roots[j]).sign() > 0) {
        throw InputError("simple roots " + std::to_string(i) + " and " + std::to_string(j) +
                         " form an acute angle");
      }
    }
  }
  RootSystem rs;
  rs.space = space;
  rs.simple_roots = std::move(simple_roots);
  for (const auto& a : rs.simple_roots) rs.simple_reflections.push_back(reflection(a, space));
  rs.group = MatrixGroup::generate(space, rs.simple_reflections, cap);

  std::set<QVector> directions;
  for (const auto& w : rs.group.elements()) {
    for (const auto& a : rs.simple_roots) {
      QVector r = w * a;
      if (directions.insert(primitive_direction(r)).second) rs.roots.push_back(std::move(r));
    }
  }
  // s_β permutes the root directions for every root β.
  for (const auto& b : rs.roots) {
    const QMatrix s = reflection(b, space);
    for (const auto& r : rs.roots) {
      if (!directions.count(primitive_direction(s * r))) {
        throw InputError("reflection of a root is not a root direction");
      }
    }
  }
  return rs;
}

RootSystem parabolic_root_system(const RootSystem& rs, const std::vector<std::size_t>& j) {
  std::vector<QVector> sub;
  for (auto i : j) sub.push_back(rs.simple_roots.at(i));
  return root_system(std::move(sub), rs.space, rs.group.order() + 1);
}

MatrixGroup parabolic(const RootSystem& rs, const std::vector<std::size_t>& j) {
  std::vector<QMatrix> gens;
  for (auto i : j) gens.push_back(rs.simple_reflections.at(i));
  return MatrixGroup::generate(rs.space, gens, rs.group.order() + 1);
}

bool in_fundamental_domain(const RootSystem& rs, const QVector& v) {
  return std::all_of(rs.simple_roots.begin(), rs.simple_roots.end(),
                     [&](const QVector& a) { return rs.space.inner(v, a).sign() >= 0; });
}

std::vector<QVector> fundamental_coweights(const RootSystem& rs) {
  const std::size_t d = rs.space.dim();
  if (rs.rank() != d) throw PreconditionError("root system rank differs from the ambient dimension");
  std::vector<QVector> rows;
  for (const auto& a : rs.simple_roots) rows.push_back(rs.space.functional_of(a));
  const QMatrix m = QMatrix::from_rows(rows, d);
  std::vector<QVector> out;
  for (std::size_t i = 0; i < d; ++i) {
    auto w = solve(m, unit_vector(d, i));
    FANCHAR_ASSERT(w.has_value(), "simple roots do not span");
    out.push_back(*w);
  }
  return out;
}

Fan coxeter_fan(const RootSystem& rs) {
  const auto omega = fundamental_coweights(rs);
  std::vector<QVector> rays;
  std::map<QVector, std::size_t> index;
  std::vector<std::vector<std::size_t>> chambers;
  for (const auto& w : rs.group.elements()) {
    std::vector<std::size_t> chamber;
    for (const auto& o : omega) {
      QVector v = w * o;
      auto [it, inserted] = index.emplace(primitive_direction(v), rays.size());
      if (inserted) rays.push_back(std::move(v));
      chamber.push_back(it->second);
    }
    chambers.push_back(std::move(chamber));
  }
  return Fan::from_maximal_cones(rs.space, std::move(rays), chambers);
}

RootSystem type_a(std::size_t n) {
  QMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, i) = 2;
    if (i + 1 < n) {
      gram(i, i + 1) = -1;
      gram(i + 1, i) = -1;
    }
  }
  std::vector<QVector> simple;
  for (std::size_t i = 0; i < n; ++i) simple.push_back(unit_vector(n, i));
  return root_system(std::move(simple), AmbientSpace(n, gram));
}

RootSystem type_b(std::size_t n) {
  std::vector<QVector> simple;
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(unit_vector(n, i) - unit_vector(n, i + 1));
  simple.push_back(unit_vector(n, n - 1));
  return root_system(std::move(simple), AmbientSpace::euclidean(n));
}

RootSystem sign_system(std::size_t n) {
  std::vector<QVector> simple;
  for (std::size_t i = 0; i < n; ++i) simple.push_back(unit_vector(n, i));
  return root_system(std::move(simple), AmbientSpace::euclidean(n));
}

}  // namespace fanchar
