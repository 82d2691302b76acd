#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fanchar/exact/qmatrix.hpp"
#include "fanchar/exact/qpoly.hpp"

namespace fanchar {

/// Rank via fraction-free (Bareiss) elimination on integer-cleared rows.
std::size_t rank(const QMatrix& m);

/// Reduced row echelon form. `reduced` keeps only the nonzero rows; each has
/// a 1 in its pivot column and zeros in every other pivot column.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(QMatrix m);

/// Basis of {x : m x = 0}, each vector with integer entries.
std::vector<QVector> kernel(const QMatrix& m);

/// A particular solution of m x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

Rational determinant(const QMatrix& m);
QMatrix inverse(const QMatrix& m);

/// det(tI − m).
QPoly det_poly(const QMatrix& m);

/// det(I − t·m) = t^d · det_poly(m)(1/t).
QPoly det_one_minus_t(const QMatrix& m);

/// Matrix of m restricted to the m-invariant subspace with basis u_basis,
/// i.e. the M with m·U = U·M where U has the basis vectors as columns.
QMatrix restrict_matrix(const QMatrix& m, const std::vector<QVector>& u_basis);

/// Matrix of m induced on V / span(u_basis), in the basis obtained by
/// extending u_basis with standard unit vectors and projecting.
QMatrix quotient_matrix(const QMatrix& m, const std::vector<QVector>& u_basis);

/// True iff v lies in the span of the given vectors.
bool in_span(const std::vector<QVector>& vectors, const QVector& v, std::size_t dim);

/// Indices of a maximal linearly independent subset (greedy, in order).
std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors, std::size_t dim);

}  // namespace fanchar
