#include "fanchar/exact/lp.hpp"

#include "fanchar/error.hpp"

namespace fanchar {

std::optional<QVector> nonnegative_solution(const QMatrix& a, const QVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw DimensionError("LP right-hand side length mismatch");
  if (m == 0) return QVector(n);

  // Tableau columns: n structural, m artificial, 1 rhs. Row m is the
  // phase-one objective (sum of artificials) in reduced-cost form.
  const std::size_t width = n + m + 1;
  QMatrix t(m + 1, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? -a(i, j) : a(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = flip ? -b[i] : b[i];
    basis[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) t(m, j) -= t(i, j);
    t(m, n + m) -= t(i, n + m);
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (t(m, j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter).sign() <= 0) continue;
      const Rational ratio = t(i, n + m) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase-one objective is bounded below by zero.
    FANCHAR_ASSERT(leave != m, "unbounded phase-one LP");
    const Rational inv = t(leave, enter).inverse();
    for (std::size_t j = 0; j < width; ++j) {
      if (!t(leave, j).is_zero()) t(leave, j) *= inv;
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter).is_zero()) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) {
        if (!t(leave, j).is_zero()) t(i, j) -= f * t(leave, j);
      }
    }
    basis[leave] = enter;
  }

  if (!t(m, n + m).is_zero()) return std::nullopt;
  QVector x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t(i, n + m);
  }
  return x;
}

bool in_cone(const std::vector<QVector>& generators, const QVector& v, std::size_t dim) {
  if (is_zero(v)) return true;
  if (generators.empty()) return false;
  return nonnegative_solution(QMatrix::from_columns(generators, dim), v).has_value();
}

bool in_relative_interior(const std::vector<QVector>& generators, const QVector& v, std::size_t dim) {
  if (generators.empty()) return is_zero(v);
  // v = Σ λ_i g_i with all λ_i > 0. Homogenise: λ_i = s·(1 + μ_i), s > 0,
  // so Σ (1 + μ_i) g_i − s'·v = 0 with s' = 1/s. For a pointed cone the
  // left sum is nonzero, hence s' > 0 automatically unless v = 0.
  const std::size_t k = generators.size();
  if (is_zero(v)) return false;
  QMatrix a(dim, k + 1);
  QVector rhs(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      a(r, i) = generators[i][r];
      rhs[r] -= generators[i][r];
    }
    a(r, k) = -v[r];
  }
  auto sol = nonnegative_solution(a, rhs);
  if (!sol) return false;
  // s' = 0 would mean Σ(1+μ)g = 0: the cone is not pointed. Reject, the
  // caller only passes pointed cones.
  return !(*sol)[k].is_zero();
}

bool is_pointed(const std::vector<QVector>& generators, std::size_t dim) {
  if (generators.empty()) return true;
  // Pointed iff no λ ≥ 0 with Σλ = 1 and Σ λ_i g_i = 0.
  const std::size_t k = generators.size();
  QMatrix a(dim + 1, k);
  QVector rhs(dim + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < dim; ++r) a(r, i) = generators[i][r];
    a(dim, i) = 1;
  }
  rhs[dim] = 1;
  return !nonnegative_solution(a, rhs).has_value();
}

bool relative_interiors_meet(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  // Σ (1 + λ_i) a_i = Σ (1 + μ_j) b_j with λ, μ ≥ 0 (homogeneous scaling).
  const std::size_t ka = a.size();
  const std::size_t kb = b.size();
  QMatrix m(dim, ka + kb);
  QVector rhs(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t i = 0; i < ka; ++i) {
      m(r, i) = a[i][r];
      rhs[r] -= a[i][r];
    }
    for (std::size_t j = 0; j < kb; ++j) {
      m(r, ka + j) = -b[j][r];
      rhs[r] += b[j][r];
    }
  }
  return nonnegative_solution(m, rhs).has_value();
}

std::vector<std::size_t> irredundant_generators(const std::vector<QVector>& generators, std::size_t dim) {
  std::vector<std::size_t> keep;
  std::vector<bool> dropped(generators.size(), false);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (j != i && !dropped[j]) others.push_back(generators[j]);
    }
    if (in_cone(others, generators[i], dim)) {
      dropped[i] = true;
    } else {
      keep.push_back(i);
    }
  }
  return keep;
}

}  // namespace fanchar
