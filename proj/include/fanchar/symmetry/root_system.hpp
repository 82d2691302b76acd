#pragma once

#include <cstddef>
#include <vector>

#include "fanchar/symmetry/group.hpp"

namespace fanchar {

/// Simple system Δ, the roots Φ = W·Δ and the reflection group W.
struct RootSystem {
  AmbientSpace space;
  std::vector<QVector> simple_roots;
  std::vector<QVector> roots;
  std::vector<QMatrix> simple_reflections;
  MatrixGroup group;

  std::size_t rank() const { return simple_roots.size(); }
};

/// Requires linearly independent, pairwise non-acute simple roots.
RootSystem root_system(std::vector<QVector> simple_roots, const AmbientSpace& space,
                       std::size_t cap = kDefaultGroupCap);

/// The standard parabolic W_J as a root system on Δ_J (same ambient space).
RootSystem parabolic_root_system(const RootSystem& rs, const std::vector<std::size_t>& j);

/// W_J as a matrix group.
MatrixGroup parabolic(const RootSystem& rs, const std::vector<std::size_t>& j);

/// v ∈ D, i.e. ⟨v, α⟩ ≥ 0 for every simple root.
bool in_fundamental_domain(const RootSystem& rs, const QVector& v);

/// ω_i with ⟨ω_i, α_j⟩ = δ_ij; requires rank = dim.
std::vector<QVector> fundamental_coweights(const RootSystem& rs);

/// Chambers w·D and their faces.
Fan coxeter_fan(const RootSystem& rs);

/// Named simple systems. Type A uses simple-root coordinates with the
/// Cartan gram matrix; B and sign systems use the standard basis.
RootSystem type_a(std::size_t n);
RootSystem type_b(std::size_t n);
RootSystem sign_system(std::size_t n);

}  // namespace fanchar
