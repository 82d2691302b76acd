#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fanchar/exact/qmatrix.hpp"

namespace fanchar {

/// V with the bilinear form ⟨u, v⟩ = uᵀ·gram·v. The gram matrix must be
/// symmetric positive definite (checked by leading principal minors).
class AmbientSpace {
 public:
  AmbientSpace() = default;
  AmbientSpace(std::size_t dim, QMatrix gram);
  static AmbientSpace euclidean(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const QMatrix& gram() const { return gram_; }
  Rational inner(const QVector& u, const QVector& v) const;
  /// Vector n with ⟨n, x⟩ = functional·x for all x, i.e. gram⁻¹·functional.
  QVector dual_vector(const QVector& functional) const;
  /// Row vector ⟨v, −⟩ as a linear functional.
  QVector functional_of(const QVector& v) const;

  friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;

 private:
  std::size_t dim_ = 0;
  QMatrix gram_;
};

/// A cone of a fan: its sorted ray indices and its linear dimension.
struct Cone {
  std::vector<std::size_t> rays;
  std::size_t dim = 0;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.rays <=> b.rays;
  }
};

std::string to_string(const Cone& c);

/// A finite collection of rational polyhedral cones given by ray indices.
/// Cones are kept sorted by (dimension, ray set); a cone is addressed by its
/// position in that order. The constructor stores exactly the given cones;
/// use `from_maximal_cones` to close a collection under faces.
class Fan {
 public:
  Fan() = default;
  Fan(AmbientSpace space, std::vector<QVector> rays, std::vector<std::vector<std::size_t>> cones);

  /// Builds the fan whose cones are the given cones and all their faces.
  static Fan from_maximal_cones(AmbientSpace space, std::vector<QVector> rays,
                                const std::vector<std::vector<std::size_t>>& maximal);

  const AmbientSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<QVector>& rays() const { return rays_; }
  const QVector& ray(std::size_t i) const { return rays_.at(i); }

  std::size_t num_cones() const { return cones_.size(); }
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone(std::size_t id) const { return cones_.at(id); }
  /// Ids of the cones of dimension k (Σ_k).
  std::vector<std::size_t> cones_of_dim(std::size_t k) const;
  /// Cones not strictly contained in another cone's ray set.
  std::vector<std::size_t> maximal_cones() const;

  std::optional<std::size_t> find_cone(const std::vector<std::size_t>& sorted_rays) const;
  /// Ray whose generator is a positive multiple of v.
  std::optional<std::size_t> find_ray(const QVector& v) const;

  std::vector<QVector> generators(const Cone& c) const;
  std::vector<QVector> generators(std::size_t cone_id) const { return generators(cone(cone_id)); }

  /// Same combinatorics with replacement ray generators (each must be a
  /// positive multiple of the original).
  Fan with_generators(std::vector<QVector> generators) const;

 private:
  AmbientSpace space_;
  std::vector<QVector> rays_;
  std::vector<Cone> cones_;
  std::map<std::vector<std::size_t>, std::size_t> cone_lookup_;
  std::map<QVector, std::size_t> ray_lookup_;
};

/// All faces of cone(generators) as sorted subsets of local indices
/// 0..n-1, including the empty face and the whole cone.
std::vector<std::vector<std::size_t>> cone_faces(const std::vector<QVector>& generators, std::size_t dim);

struct Violation {
  enum class Kind { kNotPointed, kDimension, kFaceClosure, kIntersection };
  Kind kind;
  std::size_t cone_a;
  std::optional<std::size_t> cone_b;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_fan(const Fan& f);

bool is_simplicial(const Fan& f);

struct CompletenessReport {
  bool complete = false;
  std::string witness;  // a bad ridge or an unlocated point when incomplete
};

/// Ridge-adjacency criterion plus randomized point-location cross-check.
CompletenessReport check_completeness(const Fan& f, std::size_t samples = 64, std::uint64_t seed = 0x5eed);
bool is_complete(const Fan& f, std::size_t samples = 64);

/// |Σ_i| for i = 0..dim.
std::vector<std::size_t> f_vector(const Fan& f);

/// The cone whose relative interior contains v, or nullopt when v ∉ |Σ|.
std::optional<std::size_t> point_locate(const Fan& f, const QVector& v);

/// Rational vector with entries p/q, |p| ≤ 20, 1 ≤ q ≤ 7, from a seeded
/// generator; used by randomized cross-checks.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : engine_(seed) {}
  QVector vector(std::size_t dim);
  Rational scalar();

 private:
  std::mt19937_64 engine_;
};

}  // namespace fanchar
