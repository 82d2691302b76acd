#include "fanchar/symmetry/action.hpp"

#include <algorithm>

#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"
#include "fanchar/exact/lp.hpp"

namespace fanchar {

FanAction bind_action(const MatrixGroup& g, const Fan& f) {
  if (!(g.space() == f.space())) throw DimensionError("group and fan live in different spaces");
  const std::size_t n = f.num_rays();
  FanAction a;
  a.group_ = g;
  a.ray_perm_.assign(g.order(), std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      auto image = f.find_ray(g.element(i) * f.ray(r));
      if (!image) {
        throw InvarianceError("element " + std::to_string(i) + " maps ray " + std::to_string(r) + " to a non-ray");
      }
      a.ray_perm_[i][r] = *image;
    }
  }
  // Orbit-consistent generators: keep each orbit's first ray as is and
  // transport it by the group.
  std::vector<std::optional<QVector>> gens(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (gens[r]) continue;
    for (std::size_t i = 0; i < g.order(); ++i) {
      const std::size_t target = a.ray_perm_[i][r];
      QVector w = g.element(i) * f.ray(r);
      if (!gens[target]) {
        gens[target] = std::move(w);
      } else {
        FANCHAR_ASSERT(*gens[target] == w, "stabilizer of a ray rescales its generator");
      }
    }
  }
  std::vector<QVector> rescaled;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t k = 0;
    while (f.ray(r)[k].is_zero()) ++k;
    a.scale_.push_back((*gens[r])[k] / f.ray(r)[k]);
    rescaled.push_back(std::move(*gens[r]));
  }
  a.fan_ = f.with_generators(std::move(rescaled));

  a.cone_perm_.assign(g.order(), std::vector<std::size_t>(f.num_cones()));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t c = 0; c < f.num_cones(); ++c) {
      std::vector<std::size_t> image;
      for (auto r : f.cone(c).rays) image.push_back(a.ray_perm_[i][r]);
      std::sort(image.begin(), image.end());
      auto id = f.find_cone(image);
      if (!id) {
        throw InvarianceError("element " + std::to_string(i) + " maps " + to_string(f.cone(c)) + " to a non-cone");
      }
      a.cone_perm_[i][c] = *id;
    }
  }
  a.orbit_of_.assign(f.num_cones(), f.num_cones());
  for (std::size_t c = 0; c < f.num_cones(); ++c) {
    if (a.orbit_of_[c] != f.num_cones()) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t i = 0; i < g.order(); ++i) orbit.push_back(a.cone_perm_[i][c]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto m : orbit) a.orbit_of_[m] = a.cone_orbits_.size();
    a.cone_orbits_.push_back(std::move(orbit));
  }
  a.complete_simplicial_ = is_simplicial(f) && is_complete(f);
  return a;
}

std::vector<std::size_t> FanAction::stabilizer_indices(std::size_t cone) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group_.order(); ++i) {
    if (cone_perm_[i][cone] == cone) out.push_back(i);
  }
  return out;
}

MatrixGroup setwise_stabilizer(const FanAction& a, std::size_t cone) {
  return a.group().subgroup(a.stabilizer_indices(cone));
}

std::vector<std::size_t> point_stabilizer_indices(const MatrixGroup& g, const QVector& y) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.element(i) * y == y) out.push_back(i);
  }
  return out;
}

MatrixGroup point_stabilizer(const MatrixGroup& g, const QVector& y) {
  return g.subgroup(point_stabilizer_indices(g, y));
}

std::vector<std::size_t> standard_parabolic_of(const RootSystem& rs, const QVector& y) {
  if (!in_fundamental_domain(rs, y)) throw PreconditionError("point is not in the fundamental domain");
  std::vector<std::size_t> k;
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    if (rs.space.inner(y, rs.simple_roots[j]).is_zero()) k.push_back(j);
  }
  const std::size_t wk = parabolic(rs, k).order();
  const std::size_t wy = point_stabilizer_indices(rs.group, y).size();
  if (wk != wy) {
    throw TheoremViolation("stabilizer of " + to_string(y) + " has order " + std::to_string(wy) +
                           " but its simple reflections generate only " + std::to_string(wk));
  }
  return k;
}

namespace {

// A point of relint(σ) ∩ D, if one exists.
std::optional<QVector> relint_point_in_domain(const FanAction& a, const RootSystem& rs, std::size_t cone) {
  const std::size_t d = a.fan().dim();
  const auto gens = a.fan().generators(cone);
  QVector bary = zero_vector(d);
  for (const auto& g : gens) bary = bary + g;
  if (in_fundamental_domain(rs, bary)) return bary;
  // x = Σ (1 + μ_i) v_i with μ ≥ 0 and ⟨x, α_j⟩ − s_j = 0, s ≥ 0.
  const std::size_t k = gens.size();
  const std::size_t r = rs.rank();
  QMatrix m(r, k + r);
  QVector rhs(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const Rational p = rs.space.inner(gens[i], rs.simple_roots[j]);
      m(j, i) = p;
      rhs[j] -= p;
    }
    m(j, k + j) = -1;
  }
  auto sol = nonnegative_solution(m, rhs);
  if (!sol) return std::nullopt;
  QVector x = zero_vector(d);
  for (std::size_t i = 0; i < k; ++i) x = x + (Rational(1) + (*sol)[i]) * gens[i];
  return x;
}

}  // namespace

bool relint_meets_domain(const FanAction& a, const RootSystem& rs, std::size_t cone) {
  return relint_point_in_domain(a, rs, cone).has_value();
}

std::vector<std::size_t> orbit_representatives_in_D(const FanAction& a, const RootSystem& rs) {
  std::vector<std::size_t> reps;
  for (const auto& orbit : a.cone_orbits()) {
    std::vector<std::size_t> found;
    for (auto c : orbit) {
      if (relint_meets_domain(a, rs, c)) found.push_back(c);
    }
    if (found.size() != 1) {
      throw TheoremViolation("orbit of " + to_string(a.fan().cone(orbit.front())) + " has " +
                             std::to_string(found.size()) + " cones meeting the fundamental domain");
    }
    reps.push_back(found.front());
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::optional<std::pair<std::size_t, std::size_t>> properness_witness(const FanAction& a) {
  for (std::size_t i = 0; i < a.group().order(); ++i) {
    for (std::size_t c = 0; c < a.fan().num_cones(); ++c) {
      if (a.cone_image(i, c) != c) continue;
      for (auto r : a.fan().cone(c).rays) {
        if (a.ray_image(i, r) != r) return std::make_pair(i, c);
      }
    }
  }
  return std::nullopt;
}

bool is_proper(const FanAction& a) { return !properness_witness(a).has_value(); }

namespace {

QVector average_of(const FanAction& a, std::size_t cone, const QVector& x) {
  const auto stab = a.stabilizer_indices(cone);
  QVector y = zero_vector(x.size());
  for (auto i : stab) y = y + a.group().element(i) * x;
  y = Rational(1, static_cast<long>(stab.size())) * y;
  for (auto i : stab) FANCHAR_ASSERT(a.group().element(i) * y == y, "averaged point is not fixed");
  FANCHAR_ASSERT(in_relative_interior(a.fan().generators(cone), y, y.size()) || is_zero(y),
                 "averaged point left the relative interior");
  return y;
}

}  // namespace

QVector average_point(const FanAction& a, std::size_t cone) {
  const auto gens = a.fan().generators(cone);
  QVector x = zero_vector(a.fan().dim());
  for (const auto& g : gens) x = x + g;
  if (!gens.empty()) x = Rational(1, static_cast<long>(gens.size())) * x;
  return average_of(a, cone, x);
}

MoreauPair moreau(const QVector& v, const RootSystem& rs) {
  const std::size_t r = rs.rank();
  const std::size_t d = rs.space.dim();
  if (v.size() != d) throw DimensionError("vector has wrong dimension");
  std::vector<MoreauPair> accepted;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<std::size_t> k;
    for (std::size_t j = 0; j < r; ++j) {
      if (mask >> j & 1) k.push_back(j);
    }
    QVector rhs;
    QMatrix gram(k.size(), k.size());
    for (std::size_t a = 0; a < k.size(); ++a) {
      rhs.push_back(rs.space.inner(v, rs.simple_roots[k[a]]));
      for (std::size_t b = 0; b < k.size(); ++b) {
        gram(a, b) = rs.space.inner(rs.simple_roots[k[a]], rs.simple_roots[k[b]]);
      }
    }
    QVector c;
    if (!k.empty()) {
      auto sol = solve(gram, rhs);
      FANCHAR_ASSERT(sol.has_value(), "simple-root gram matrix singular");
      c = *sol;
    }
    if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return x.sign() > 0; })) continue;
    QVector vn = zero_vector(d);
    for (std::size_t a = 0; a < k.size(); ++a) vn = vn + c[a] * rs.simple_roots[k[a]];
    const QVector vd = v - vn;
    if (!in_fundamental_domain(rs, vd)) continue;
    std::vector<Rational> coeffs(r);
    for (std::size_t a = 0; a < k.size(); ++a) coeffs[k[a]] = -c[a];
    accepted.push_back({vd, vn, coeffs});
  }
  FANCHAR_ASSERT(!accepted.empty(), "no Moreau decomposition found");
  for (const auto& m : accepted) {
    FANCHAR_ASSERT(m.v_d == accepted.front().v_d, "Moreau decomposition is not unique");
  }
  return accepted.front();
}

ParabolicData parabolic_data(const FanAction& a, const RootSystem& rs, std::size_t cone) {
  auto x = relint_point_in_domain(a, rs, cone);
  if (!x) throw PreconditionError(to_string(a.fan().cone(cone)) + " does not meet the fundamental domain");
  const QVector y = average_of(a, cone, *x);
  if (!in_fundamental_domain(rs, y)) {
    throw TheoremViolation("averaged point of " + to_string(a.fan().cone(cone)) + " left the fundamental domain");
  }
  ParabolicData out;
  out.k = standard_parabolic_of(rs, y);
  const Cone& c = a.fan().cone(cone);
  for (auto j : out.k) {
    auto s = a.group().index_of(rs.simple_reflections[j]);
    if (!s) throw PreconditionError("simple reflection is not in the acting group");
    std::vector<std::size_t> moved;
    for (auto r : c.rays) {
      if (a.ray_image(*s, r) != r) moved.push_back(r);
    }
    if (moved.empty()) continue;
    FANCHAR_ASSERT(moved.size() == 2 && a.ray_image(*s, moved[0]) == moved[1],
                   "simple reflection neither fixes the rays of " + to_string(c) + " nor swaps one pair");
    out.j0.push_back(j);
  }
  for (auto r : c.rays) {
    if (in_fundamental_domain(rs, a.fan().ray(r))) out.i.push_back(r);
  }
  return out;
}

std::optional<std::string> wall_invariance_failure(const FanAction& a, const RootSystem& rs) {
  for (std::size_t c = 0; c < a.fan().num_cones(); ++c) {
    const auto gens = a.fan().generators(c);
    if (gens.empty()) continue;
    for (const auto& beta : rs.roots) {
      // Σ (1 + μ_i) ⟨v_i, β⟩ = 0 with μ ≥ 0.
      QMatrix m(1, gens.size());
      QVector rhs(1);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        m(0, i) = rs.space.inner(gens[i], beta);
        rhs[0] -= m(0, i);
      }
      if (!nonnegative_solution(m, rhs)) continue;
      auto s = a.group().index_of(reflection(beta, rs.space));
      if (!s) return "reflection in " + to_string(beta) + " is not in the acting group";
      if (a.cone_image(*s, c) != c) {
        return to_string(a.fan().cone(c)) + " meets the wall of " + to_string(beta) + " but is not invariant";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> stabilizer_mismatch(const FanAction& a) {
  for (std::size_t c = 0; c < a.fan().num_cones(); ++c) {
    if (a.stabilizer_indices(c) != point_stabilizer_indices(a.group(), average_point(a, c))) {
      return "setwise and point stabilizers differ on " + to_string(a.fan().cone(c));
    }
  }
  return std::nullopt;
}

}  // namespace fanchar
