#include "fanchar/symmetry/group.hpp"

#include <algorithm>
#include <deque>

#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"

namespace fanchar {

bool preserves_form(const QMatrix& m, const AmbientSpace& space) {
  return m.transpose() * space.gram() * m == space.gram();
}

QMatrix reflection(const QVector& alpha, const AmbientSpace& space) {
  const std::size_t d = space.dim();
  if (alpha.size() != d) throw DimensionError("root has wrong dimension");
  if (is_zero(alpha)) throw PreconditionError("cannot reflect in the zero vector");
  const Rational norm = space.inner(alpha, alpha);
  const QVector f = space.functional_of(alpha);
  QMatrix s = QMatrix::identity(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) s(r, c) -= Rational(2) * alpha[r] * f[c] / norm;
  }
  return s;
}

MatrixGroup MatrixGroup::generate(const AmbientSpace& space, const std::vector<QMatrix>& generators,
                                  std::size_t cap) {
  const std::size_t d = space.dim();
  MatrixGroup g;
  g.space_ = space;
  for (const auto& m : generators) {
    if (m.rows() != d || m.cols() != d) throw DimensionError("generator has wrong size");
    if (!preserves_form(m, space)) throw OrthogonalityError("generator does not preserve the bilinear form");
  }
  g.generators_ = generators;
  g.elements_.push_back(QMatrix::identity(d));
  g.lookup_.emplace(g.elements_.back(), 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : generators) {
      QMatrix y = s * g.elements_[head];
      if (g.lookup_.count(y)) continue;
      if (g.elements_.size() >= cap) {
        throw InfiniteGroupError("group closure exceeds " + std::to_string(cap) + " elements");
      }
      g.lookup_.emplace(y, g.elements_.size());
      g.elements_.push_back(std::move(y));
    }
  }
  g.finish();
  return g;
}

void MatrixGroup::finish() {
  const std::size_t n = elements_.size();
  inverse_.assign(n, n);
  const QMatrix gram_inv = inverse(space_.gram());
  for (std::size_t i = 0; i < n; ++i) {
    // Form-preserving: g⁻¹ = gram⁻¹·gᵀ·gram.
    const auto j = index_of(gram_inv * elements_[i].transpose() * space_.gram());
    FANCHAR_ASSERT(j.has_value(), "group element without inverse");
    inverse_[i] = *j;
  }
  // Conjugacy classes: closure of {x} under conjugation by generators.
  std::vector<std::pair<QMatrix, QMatrix>> conj;
  for (const auto& s : generators_) conj.emplace_back(s, elements_[inverse_[lookup_.at(s)]]);
  class_of_.assign(n, n);
  classes_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != n) continue;
    const std::size_t cid = classes_.size();
    std::vector<std::size_t> members{x};
    class_of_[x] = cid;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (const auto& [s, sinv] : conj) {
        const QMatrix y = s * elements_[members[head]] * sinv;
        const std::size_t yi = lookup_.at(y);
        if (class_of_[yi] == n) {
          class_of_[yi] = cid;
          members.push_back(yi);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

std::size_t MatrixGroup::product(std::size_t a, std::size_t b) const {
  return lookup_.at(elements_.at(a) * elements_.at(b));
}

std::optional<std::size_t> MatrixGroup::index_of(const QMatrix& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

MatrixGroup MatrixGroup::subgroup(const std::vector<std::size_t>& indices) const {
  // Pick generators greedily: an element joins when it is not yet in the
  // closure of the ones picked so far.
  std::vector<QMatrix> gens;
  MatrixGroup current = trivial(space_);
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  for (auto i : sorted) {
    if (current.index_of(elements_.at(i))) continue;
    gens.push_back(elements_[i]);
    current = generate(space_, gens, order() + 1);
  }
  if (current.order() != sorted.size()) throw InputError("element set is not closed under products");
  return current;
}

}  // namespace fanchar
