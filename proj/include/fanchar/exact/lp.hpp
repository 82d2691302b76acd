#pragma once

#include <optional>
#include <vector>

#include "fanchar/exact/qmatrix.hpp"

namespace fanchar {

/// Exact feasibility for {x : A x = b, x ≥ 0}. Phase-one simplex over the
/// rationals with Bland's rule, so it always terminates. Returns a feasible
/// point (a basic solution) or nullopt.
std::optional<QVector> nonnegative_solution(const QMatrix& a, const QVector& b);

/// True iff v ∈ cone(generators).
bool in_cone(const std::vector<QVector>& generators, const QVector& v, std::size_t dim);

/// True iff v lies in the relative interior of cone(generators), i.e. v is
/// a strictly positive combination of all generators.
bool in_relative_interior(const std::vector<QVector>& generators, const QVector& v, std::size_t dim);

/// True iff cone(generators) contains no line (no nonzero x with ±x in it).
bool is_pointed(const std::vector<QVector>& generators, std::size_t dim);

/// True iff the relative interiors of the two cones share a point.
bool relative_interiors_meet(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim);

/// Indices of generators not expressible as a nonnegative combination of
/// the others (the extreme generators when the cone is pointed and the
/// generators are pairwise non-parallel).
std::vector<std::size_t> irredundant_generators(const std::vector<QVector>& generators, std::size_t dim);

}  // namespace fanchar
