#include <algorithm>
#include <deque>
#include <sstream>

#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"
#include "fanchar/exact/lp.hpp"
#include "fanchar/fan/fan.hpp"

namespace fanchar {

std::string ValidationReport::summary() const {
  if (ok()) return "valid fan";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) os << "\n  " << v.message;
  return os.str();
}

ValidationReport validate_fan(const Fan& f) {
  ValidationReport report;
  const std::size_t d = f.dim();
  for (std::size_t id = 0; id < f.num_cones(); ++id) {
    const Cone& c = f.cone(id);
    const auto gens = f.generators(c);
    if (!is_pointed(gens, d)) {
      report.violations.push_back({Violation::Kind::kNotPointed, id, std::nullopt,
                                   to_string(c) + " is not strongly convex"});
      continue;
    }
    for (const auto& local : cone_faces(gens, d)) {
      std::vector<std::size_t> face;
      for (auto i : local) face.push_back(c.rays[i]);
      if (!f.find_cone(face)) {
        report.violations.push_back({Violation::Kind::kFaceClosure, id, std::nullopt,
                                     "face " + to_string(Cone{face, 0}) + " of " + to_string(c) + " is missing"});
      }
    }
  }
  // Pairwise intersections: for a face-closed family of pointed cones,
  // "σ ∩ τ is a common face" is equivalent to distinct cones having
  // disjoint relative interiors.
  for (std::size_t a = 0; a < f.num_cones(); ++a) {
    const auto ga = f.generators(a);
    for (std::size_t b = a + 1; b < f.num_cones(); ++b) {
      if (relative_interiors_meet(ga, f.generators(b), d)) {
        report.violations.push_back({Violation::Kind::kIntersection, a, b,
                                     "relative interiors of " + to_string(f.cone(a)) + " and " +
                                         to_string(f.cone(b)) + " intersect"});
      }
    }
  }
  return report;
}

bool is_simplicial(const Fan& f) {
  return std::all_of(f.cones().begin(), f.cones().end(),
                     [](const Cone& c) { return c.dim == c.rays.size(); });
}

std::vector<std::size_t> f_vector(const Fan& f) {
  std::vector<std::size_t> fv(f.dim() + 1, 0);
  for (const auto& c : f.cones()) {
    if (c.dim < fv.size()) ++fv[c.dim];
  }
  return fv;
}

std::optional<std::size_t> point_locate(const Fan& f, const QVector& v) {
  const std::size_t d = f.dim();
  if (v.size() != d) throw DimensionError("point has wrong dimension");
  if (is_zero(v)) return f.find_cone({});
  // Search from the top dimension down; the first cone containing v
  // contains it in the relative interior of one of its faces.
  std::vector<std::size_t> order(f.num_cones());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = f.num_cones() - 1 - i;
  for (auto id : order) {
    const Cone& c = f.cone(id);
    if (c.rays.empty()) continue;
    const auto gens = f.generators(c);
    if (c.dim == c.rays.size()) {
      auto coeffs = solve(QMatrix::from_columns(gens, d), v);
      if (!coeffs) continue;
      if (std::any_of(coeffs->begin(), coeffs->end(), [](const Rational& x) { return x.sign() < 0; })) continue;
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < c.rays.size(); ++i) {
        if ((*coeffs)[i].sign() > 0) support.push_back(c.rays[i]);
      }
      return f.find_cone(support);
    }
    if (!in_cone(gens, v, d)) continue;
    for (const auto& local : cone_faces(gens, d)) {
      if (local.empty()) continue;
      std::vector<std::size_t> face;
      std::vector<QVector> fg;
      for (auto i : local) {
        face.push_back(c.rays[i]);
        fg.push_back(gens[i]);
      }
      if (in_relative_interior(fg, v, d)) return f.find_cone(face);
    }
  }
  return std::nullopt;
}

QVector RandomRationals::vector(std::size_t dim) {
  QVector v(dim);
  for (auto& x : v) x = scalar();
  return v;
}

Rational RandomRationals::scalar() {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  const long p = num(engine_);
  const long q = den(engine_);
  return Rational(p, q);
}

CompletenessReport check_completeness(const Fan& f, std::size_t samples, std::uint64_t seed) {
  const std::size_t d = f.dim();
  if (d == 0) return {f.find_cone({}).has_value(), "zero-dimensional space"};
  auto top = f.cones_of_dim(d);
  if (top.empty()) return {false, "no cone of full dimension"};
  for (auto id : f.maximal_cones()) {
    if (f.cone(id).dim != d) return {false, "maximal cone " + to_string(f.cone(id)) + " is not full-dimensional"};
  }
  auto contains = [&](std::size_t big, std::size_t small) {
    const auto& b = f.cone(big).rays;
    const auto& s = f.cone(small).rays;
    return std::includes(b.begin(), b.end(), s.begin(), s.end());
  };
  // Dual graph: adjacency through shared ridges.
  std::vector<std::vector<std::size_t>> adj(top.size());
  for (auto ridge : f.cones_of_dim(d - 1)) {
    std::vector<std::size_t> around;
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (contains(top[i], ridge)) around.push_back(i);
    }
    if (around.size() != 2) {
      return {false, "ridge " + to_string(f.cone(ridge)) + " lies in " + std::to_string(around.size()) +
                         " maximal cone(s)"};
    }
    adj[around[0]].push_back(around[1]);
    adj[around[1]].push_back(around[0]);
  }
  std::vector<bool> seen(top.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != top.size()) return {false, "dual graph of maximal cones is disconnected"};
  RandomRationals rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const QVector v = rng.vector(d);
    if (!point_locate(f, v)) return {false, "point " + to_string(v) + " is not covered"};
  }
  return {true, {}};
}

bool is_complete(const Fan& f, std::size_t samples) { return check_completeness(f, samples).complete; }

}  // namespace fanchar
