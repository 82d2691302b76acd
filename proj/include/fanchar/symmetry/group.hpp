#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fanchar/exact/qmatrix.hpp"
#include "fanchar/fan/fan.hpp"

namespace fanchar {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// Finite group of matrices preserving the gram form. Element 0 is the
/// identity; the element order is deterministic (breadth-first from the
/// generators).
class MatrixGroup {
 public:
  MatrixGroup() = default;

  /// Closure of the generators. Throws OrthogonalityError for a generator
  /// not preserving the form and InfiniteGroupError past `cap` elements.
  static MatrixGroup generate(const AmbientSpace& space, const std::vector<QMatrix>& generators,
                              std::size_t cap = kDefaultGroupCap);
  static MatrixGroup trivial(const AmbientSpace& space) { return generate(space, {}); }

  const AmbientSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<QMatrix>& elements() const { return elements_; }
  const QMatrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<QMatrix>& generators() const { return generators_; }

  std::size_t inverse_of(std::size_t i) const { return inverse_.at(i); }
  /// Index of element(a)·element(b).
  std::size_t product(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> index_of(const QMatrix& m) const;

  /// Conjugacy classes as sorted index lists, ordered by smallest member
  /// (so class 0 is {identity}).
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }

  /// The subgroup formed by the given elements (must be closed).
  MatrixGroup subgroup(const std::vector<std::size_t>& indices) const;

 private:
  void finish();

  AmbientSpace space_;
  std::vector<QMatrix> generators_;
  std::vector<QMatrix> elements_;
  std::map<QMatrix, std::size_t> lookup_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

inline MatrixGroup generate_group(const AmbientSpace& space, const std::vector<QMatrix>& generators,
                                  std::size_t cap = kDefaultGroupCap) {
  return MatrixGroup::generate(space, generators, cap);
}

/// True iff mᵀ·gram·m = gram.
bool preserves_form(const QMatrix& m, const AmbientSpace& space);

/// s_α(v) = v − 2⟨v,α⟩/⟨α,α⟩·α.
QMatrix reflection(const QVector& alpha, const AmbientSpace& space);

}  // namespace fanchar
