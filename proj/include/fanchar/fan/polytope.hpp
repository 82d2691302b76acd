#pragma once

#include <cstddef>
#include <vector>

#include "fanchar/exact/qmatrix.hpp"
#include "fanchar/fan/fan.hpp"

namespace fanchar {

/// Convex hull of finitely many points, stored by its vertices only.
struct Polytope {
  AmbientSpace space;
  std::vector<QVector> vertices;
  std::size_t affine_dim = 0;
};

/// Drops every point lying in the convex hull of the others.
Polytope make_polytope(AmbientSpace space, std::vector<QVector> points);

/// normal·x ≤ offset, tight exactly on `vertices`. `normal` is a row
/// functional scaled to coprime integers.
struct Facet {
  QVector normal;
  Rational offset;
  std::vector<std::size_t> vertices;
};

/// Facets by brute force over d-subsets of vertices. Requires p
/// full-dimensional (DimensionError otherwise).
std::vector<Facet> facets(const Polytope& p);

/// Cones over the proper faces of p; the origin must be interior.
Fan central_fan(const Polytope& p);

/// Outer normal cones of the faces of p. Ray generators are the gram-duals
/// of the facet functionals.
Fan normal_fan(const Polytope& p);

/// Vertices of {x : a_i·x ≤ b_i}, assumed bounded.
std::vector<QVector> vertices_of_inequalities(const std::vector<QVector>& a, const QVector& b, std::size_t dim);

Polytope cross_polytope(std::size_t d);
Polytope cube(std::size_t d);

/// Central fan of conv(±e_i).
Fan cross_polytope_fan(std::size_t d);

}  // namespace fanchar
