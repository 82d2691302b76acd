#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fanchar/fan/fan.hpp"
#include "fanchar/symmetry/group.hpp"
#include "fanchar/symmetry/root_system.hpp"

namespace fanchar {

/// A group bound to an invariant fan. The stored fan carries rescaled ray
/// generators with g·v_ρ = v_{gρ} for all g and ρ.
class FanAction {
 public:
  FanAction() = default;

  const MatrixGroup& group() const { return group_; }
  const Fan& fan() const { return fan_; }
  /// New generator = scale · original generator.
  const std::vector<Rational>& generator_scale() const { return scale_; }

  std::size_t ray_image(std::size_t g, std::size_t ray) const { return ray_perm_[g][ray]; }
  const std::vector<std::size_t>& ray_perm(std::size_t g) const { return ray_perm_.at(g); }
  std::size_t cone_image(std::size_t g, std::size_t cone) const { return cone_perm_[g][cone]; }

  /// Orbits of cones, each sorted, ordered by smallest member.
  const std::vector<std::vector<std::size_t>>& cone_orbits() const { return cone_orbits_; }
  std::size_t orbit_of(std::size_t cone) const { return orbit_of_.at(cone); }

  /// Element indices g with g·σ = σ.
  std::vector<std::size_t> stabilizer_indices(std::size_t cone) const;

  bool complete_simplicial() const { return complete_simplicial_; }

  friend FanAction bind_action(const MatrixGroup& g, const Fan& f);

 private:
  MatrixGroup group_;
  Fan fan_;
  std::vector<Rational> scale_;
  std::vector<std::vector<std::size_t>> ray_perm_;
  std::vector<std::vector<std::size_t>> cone_perm_;
  std::vector<std::vector<std::size_t>> cone_orbits_;
  std::vector<std::size_t> orbit_of_;
  bool complete_simplicial_ = false;
};

/// Throws InvarianceError when some element maps a cone to a non-cone.
FanAction bind_action(const MatrixGroup& g, const Fan& f);

/// G_σ.
MatrixGroup setwise_stabilizer(const FanAction& a, std::size_t cone);

/// Element indices fixing y.
std::vector<std::size_t> point_stabilizer_indices(const MatrixGroup& g, const QVector& y);
MatrixGroup point_stabilizer(const MatrixGroup& g, const QVector& y);

/// Simple-root indices K with W_y = W_K, for y ∈ D. Throws TheoremViolation
/// when the stabilizer is not generated by the simple reflections it holds.
std::vector<std::size_t> standard_parabolic_of(const RootSystem& rs, const QVector& y);

/// One cone per orbit with relint meeting D. Throws TheoremViolation when
/// an orbit has zero or several such cones.
std::vector<std::size_t> orbit_representatives_in_D(const FanAction& a, const RootSystem& rs);

/// True iff relint(cone) ∩ D ≠ ∅ (barycenter first, LP fallback).
bool relint_meets_domain(const FanAction& a, const RootSystem& rs, std::size_t cone);

/// (element, cone) with g·σ = σ but g moving a ray of σ, if any.
std::optional<std::pair<std::size_t, std::size_t>> properness_witness(const FanAction& a);
bool is_proper(const FanAction& a);

/// Average over G_σ of the generator barycenter of σ.
QVector average_point(const FanAction& a, std::size_t cone);

struct MoreauPair {
  QVector v_d;
  QVector v_n;
  /// v_n = −Σ coeffs[k]·α_k with coeffs ≥ 0.
  std::vector<Rational> coeffs;
};

/// v = v_D + v_N with v_D ∈ D, v_N ∈ cone(−Δ), ⟨v_D, v_N⟩ = 0.
MoreauPair moreau(const QVector& v, const RootSystem& rs);

struct ParabolicData {
  std::vector<std::size_t> k;   // simple roots generating W_σ
  std::vector<std::size_t> j0;  // those swapping exactly one pair of rays
  std::vector<std::size_t> i;   // rays of σ in D
};

ParabolicData parabolic_data(const FanAction& a, const RootSystem& rs, std::size_t cone);

/// relint(σ) meets H_α ⇒ s_α·σ = σ, over all roots α and cones σ. Returns
/// a description of the first failure, or nullopt.
std::optional<std::string> wall_invariance_failure(const FanAction& a, const RootSystem& rs);

/// G_σ = W_{average_point(σ)} for every cone; first failure or nullopt.
std::optional<std::string> stabilizer_mismatch(const FanAction& a);

}  // namespace fanchar
