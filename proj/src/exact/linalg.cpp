#include "fanchar/exact/linalg.hpp"

#include <utility>

#include "fanchar/error.hpp"

namespace fanchar {

std::size_t rank(const QMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const QVector cleared = clear_denominators(m.row_vector(r));
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = cleared[c].num();
  }
  mpz_class prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[rk][c] * a[r][j] - a[r][c] * a[rk][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][j] = std::move(v);
      }
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

RowEchelon rref(QMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    const Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix reduced(pivots.size(), cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = std::move(m(i, j));
  return {std::move(reduced), std::move(pivots)};
}

std::vector<QVector> kernel(const QMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw RankError("inverse of singular matrix");
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

QPoly det_poly(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("det_poly of non-square matrix");
  // Faddeev–LeVerrier: coefficient c_{n-k} = -tr(A·M_k)/k with
  // M_k = A·M_{k-1} + c_{n-k+1}·I, M_0 = 0, c_n = 1.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return QPoly(std::move(c));
}

QPoly det_one_minus_t(const QMatrix& m) { return det_poly(m).reversed(m.rows()); }

namespace {

/// Basis matrix (as columns) extending u_basis to a basis of the whole space.
QMatrix extended_basis(const std::vector<QVector>& u_basis, std::size_t dim) {
  for (const auto& u : u_basis) {
    if (u.size() != dim) throw DimensionError("subspace basis vector has wrong length");
  }
  if (independent_subset(u_basis, dim).size() != u_basis.size()) {
    throw RankError("subspace basis is linearly dependent");
  }
  std::vector<QVector> cols = u_basis;
  for (std::size_t i = 0; i < dim && cols.size() < dim; ++i) {
    cols.push_back(unit_vector(dim, i));
    if (independent_subset(cols, dim).size() != cols.size()) cols.pop_back();
  }
  return QMatrix::from_columns(cols, dim);
}

QMatrix block_form(const QMatrix& m, const std::vector<QVector>& u_basis) {
  if (!m.is_square()) throw DimensionError("matrix must be square");
  const std::size_t d = m.rows();
  const QMatrix basis = extended_basis(u_basis, d);
  const QMatrix blocks = inverse(basis) * m * basis;
  const std::size_t k = u_basis.size();
  for (std::size_t r = k; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (!blocks(r, c).is_zero()) throw InvarianceError("subspace is not invariant under the matrix");
    }
  }
  return blocks;
}

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(i);
  return v;
}

}  // namespace

QMatrix restrict_matrix(const QMatrix& m, const std::vector<QVector>& u_basis) {
  const QMatrix blocks = block_form(m, u_basis);
  const auto top = iota(0, u_basis.size());
  return blocks.submatrix(top, top);
}

QMatrix quotient_matrix(const QMatrix& m, const std::vector<QVector>& u_basis) {
  const QMatrix blocks = block_form(m, u_basis);
  const auto bottom = iota(u_basis.size(), m.rows());
  return blocks.submatrix(bottom, bottom);
}

bool in_span(const std::vector<QVector>& vectors, const QVector& v, std::size_t dim) {
  if (is_zero(v)) return true;
  if (vectors.empty()) return false;
  return solve(QMatrix::from_columns(vectors, dim), v).has_value();
}

std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors, std::size_t dim) {
  // Incremental elimination against an echelon basis.
  std::vector<QVector> echelon;
  std::vector<std::size_t> lead;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    QVector v = vectors[idx];
    if (v.size() != dim) throw DimensionError("vector has wrong length");
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational& f = v[lead[e]];
      if (f.is_zero()) continue;
      const Rational coef = f;
      for (std::size_t j = 0; j < dim; ++j) {
        if (!echelon[e][j].is_zero()) v[j] -= coef * echelon[e][j];
      }
    }
    std::size_t p = 0;
    while (p < dim && v[p].is_zero()) ++p;
    if (p == dim) continue;
    const Rational inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // keep echelon rows reduced at the new lead
    for (auto& row : echelon) {
      const Rational f = row[p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) row[j] -= f * v[j];
    }
    echelon.push_back(std::move(v));
    lead.push_back(p);
    chosen.push_back(idx);
  }
  return chosen;
}

}  // namespace fanchar
