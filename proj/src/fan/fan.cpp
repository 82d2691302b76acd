#include "fanchar/fan/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"

namespace fanchar {

AmbientSpace::AmbientSpace(std::size_t dim, QMatrix gram) : dim_(dim), gram_(std::move(gram)) {
  if (gram_.rows() != dim || gram_.cols() != dim) throw DimensionError("gram matrix must be dim x dim");
  if (gram_ != gram_.transpose()) throw InputError("gram matrix is not symmetric");
  for (std::size_t k = 1; k <= dim; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (determinant(gram_.submatrix(idx, idx)).sign() <= 0) {
      throw InputError("gram matrix is not positive definite");
    }
  }
}

AmbientSpace AmbientSpace::euclidean(std::size_t dim) { return AmbientSpace(dim, QMatrix::identity(dim)); }

Rational AmbientSpace::inner(const QVector& u, const QVector& v) const { return fanchar::inner(gram_, u, v); }

QVector AmbientSpace::dual_vector(const QVector& functional) const {
  auto x = solve(gram_, functional);
  FANCHAR_ASSERT(x.has_value(), "gram matrix singular");
  return *x;
}

QVector AmbientSpace::functional_of(const QVector& v) const { return gram_ * v; }

std::string to_string(const Cone& c) {
  std::ostringstream os;
  os << "cone{";
  for (std::size_t i = 0; i < c.rays.size(); ++i) os << (i ? "," : "") << c.rays[i];
  os << "}";
  return os.str();
}

Fan::Fan(AmbientSpace space, std::vector<QVector> rays, std::vector<std::vector<std::size_t>> cones)
    : space_(std::move(space)), rays_(std::move(rays)) {
  const std::size_t d = space_.dim();
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].size() != d) throw DimensionError("ray generator has wrong length");
    if (is_zero(rays_[i])) throw InputError("zero ray generator");
    auto [it, inserted] = ray_lookup_.emplace(primitive_direction(rays_[i]), i);
    if (!inserted) {
      throw InputError("rays " + std::to_string(it->second) + " and " + std::to_string(i) +
                       " are positive multiples of each other");
    }
  }
  for (auto& c : cones) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw InputError("cone lists a ray twice");
    for (auto r : c) {
      if (r >= rays_.size()) throw InputError("cone references unknown ray " + std::to_string(r));
    }
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  for (auto& c : cones) {
    Cone cone;
    cone.dim = c.empty() ? 0 : rank(QMatrix::from_columns(generators(Cone{c, 0}), d));
    cone.rays = std::move(c);
    cones_.push_back(std::move(cone));
  }
  std::sort(cones_.begin(), cones_.end());
  for (std::size_t i = 0; i < cones_.size(); ++i) cone_lookup_.emplace(cones_[i].rays, i);
}

Fan Fan::from_maximal_cones(AmbientSpace space, std::vector<QVector> rays,
                            const std::vector<std::vector<std::size_t>>& maximal) {
  std::set<std::vector<std::size_t>> all;
  all.insert({});
  const std::size_t d = space.dim();
  for (auto cone : maximal) {
    std::sort(cone.begin(), cone.end());
    std::vector<QVector> gens;
    for (auto r : cone) {
      if (r >= rays.size()) throw InputError("cone references unknown ray " + std::to_string(r));
      gens.push_back(rays[r]);
    }
    for (const auto& face : cone_faces(gens, d)) {
      std::vector<std::size_t> global;
      for (auto local : face) global.push_back(cone[local]);
      all.insert(std::move(global));
    }
  }
  return Fan(std::move(space), std::move(rays), std::vector<std::vector<std::size_t>>(all.begin(), all.end()));
}

std::vector<std::size_t> Fan::cones_of_dim(std::size_t k) const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (cones_[i].dim == k) ids.push_back(i);
  }
  return ids;
}

std::vector<std::size_t> Fan::maximal_cones() const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < cones_.size() && !contained; ++j) {
      if (j == i || cones_[j].rays.size() <= cones_[i].rays.size()) continue;
      contained = std::includes(cones_[j].rays.begin(), cones_[j].rays.end(), cones_[i].rays.begin(),
                                cones_[i].rays.end());
    }
    if (!contained) ids.push_back(i);
  }
  return ids;
}

std::optional<std::size_t> Fan::find_cone(const std::vector<std::size_t>& sorted_rays) const {
  auto it = cone_lookup_.find(sorted_rays);
  if (it == cone_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Fan::find_ray(const QVector& v) const {
  if (v.size() != dim() || is_zero(v)) return std::nullopt;
  auto it = ray_lookup_.find(primitive_direction(v));
  if (it == ray_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<QVector> Fan::generators(const Cone& c) const {
  std::vector<QVector> g;
  g.reserve(c.rays.size());
  for (auto r : c.rays) g.push_back(rays_.at(r));
  return g;
}

Fan Fan::with_generators(std::vector<QVector> generators) const {
  if (generators.size() != rays_.size()) throw DimensionError("generator count mismatch");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (primitive_direction(generators[i]) != primitive_direction(rays_[i])) {
      throw InputError("replacement generator changes the direction of ray " + std::to_string(i));
    }
  }
  Fan copy = *this;
  copy.rays_ = std::move(generators);
  return copy;
}

namespace {

void collect_faces(const std::vector<QVector>& gens, const std::vector<std::size_t>& subset, std::size_t dim,
                   std::set<std::vector<std::size_t>>& out) {
  if (!out.insert(subset).second) return;
  if (subset.empty()) return;
  std::vector<QVector> sub;
  for (auto i : subset) sub.push_back(gens[i]);
  const std::size_t k = rank(QMatrix::from_columns(sub, dim));
  if (k == subset.size()) {
    // simplicial: every subset is a face
    const std::size_t n = subset.size();
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> f;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::size_t{1} << b)) f.push_back(subset[b]);
      }
      out.insert(std::move(f));
    }
    return;
  }
  // Facets: (k-1)-subsets of rank k-1 whose annihilating functional (within
  // the span) has constant sign on all generators.
  const std::size_t n = subset.size();
  std::set<std::vector<std::size_t>> facets;
  std::vector<std::size_t> pick(k - 1);
  for (std::size_t i = 0; i < k - 1; ++i) pick[i] = i;
  for (;;) {
    std::vector<QVector> rows;
    for (auto p : pick) rows.push_back(sub[p]);
    const bool usable = rows.empty() || rank(QMatrix::from_rows(rows, dim)) == k - 1;
    if (usable) {
      std::vector<QVector> ker = rows.empty() ? std::vector<QVector>{} : kernel(QMatrix::from_rows(rows, dim));
      if (rows.empty()) {
        for (std::size_t i = 0; i < dim; ++i) ker.push_back(unit_vector(dim, i));
      }
      for (const auto& f : ker) {
        bool nonzero = false;
        bool pos = false;
        bool neg = false;
        for (const auto& g : sub) {
          const int s = dot(f, g).sign();
          nonzero |= (s != 0);
          pos |= (s > 0);
          neg |= (s < 0);
        }
        if (!nonzero) continue;
        if (!(pos && neg)) {
          std::vector<std::size_t> facet;
          for (std::size_t i = 0; i < n; ++i) {
            if (dot(f, sub[i]).is_zero()) facet.push_back(subset[i]);
          }
          facets.insert(std::move(facet));
        }
        break;  // all usable kernel vectors induce the same functional on the span
      }
    }
    // next combination
    std::size_t i = k - 1;
    while (i > 0 && pick[i - 1] == n - (k - 1) + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  for (const auto& facet : facets) collect_faces(gens, facet, dim, out);
}

}  // namespace

std::vector<std::vector<std::size_t>> cone_faces(const std::vector<QVector>& generators, std::size_t dim) {
  std::vector<std::size_t> all(generators.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> out;
  collect_faces(generators, all, dim, out);
  out.insert({});
  return {out.begin(), out.end()};
}

}  // namespace fanchar
