#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "fanchar/exact/qpoly.hpp"
#include "fanchar/fan/fan.hpp"
#include "fanchar/symmetry/action.hpp"
#include "fanchar/symmetry/root_system.hpp"

namespace fanchar {

/// Σ_i |Σ_i| (t−1)^{d−i}. Warns on `warn` (when given) for fans that are
/// not simplicial.
QPoly h_polynomial(const Fan& f, std::ostream* warn = nullptr);

/// Σ over g-invariant cones of det(tI − g|V/Vσ).
QPoly char_fixed_cones(const FanAction& a, std::size_t element);

/// Σ over g-invariant cones of t^{dim σ}·det(I − tg_V)/det(I − tg_{Vσ}).
QPoly char_maschke(const FanAction& a, std::size_t element);

/// One polynomial per conjugacy class.
struct GradedCharacter {
  std::vector<std::size_t> representatives;  // element index per class
  std::vector<std::size_t> class_sizes;
  std::vector<QPoly> values;
};

/// Frobenius-formula evaluation of Σ_σ (|G_σ|/|G|)·Ind(det(tI − ψ_σ)) per
/// class, over orbit representatives. When `full_sum_limit` ≥ |Σ|·|G| the
/// sum over all cones is evaluated too and compared. Throws
/// TheoremViolation on any disagreement with char_fixed_cones.
GradedCharacter equivariant_h_series(const FanAction& a, std::size_t full_sum_limit = 50000);

/// Trace of g on Sym^k(V) from the induced action on degree-k monomials.
Rational sym_trace(const QMatrix& g, std::size_t k);

/// sym_trace agrees with the series 1/det(I − tg) through degree k_max.
bool sym_trace_check(const QMatrix& g, std::size_t k_max);

/// Trace of g on Λ^k(V) from the induced matrix of k-minors.
Rational ext_trace(const QMatrix& g, std::size_t k);

/// Coefficient of t^m in det(tI − g) is (−1)^{d−m}·trace(g, Λ^{d−m}V).
bool ext_trace_check(const QMatrix& g);

/// (1/|G|)·Σ_g P(t, g).
QPoly invariant_poincare_avg(const FanAction& a);

/// Σ over orbit representatives of (1/|W_σ|)·Σ_{w∈W_σ} det(tI − w|V/Vσ).
QPoly invariant_poincare_orbit(const FanAction& a, const RootSystem& rs);

/// t^{|K|−|J0|}·(t−1)^{d−|I|−|K|}.
QPoly orbit_contribution(const FanAction& a, const RootSystem& rs, std::size_t cone);

/// Σ of orbit_contribution over orbit representatives.
QPoly invariant_poincare_closed(const FanAction& a, const RootSystem& rs);

/// det(tI − g|V/Vσ) for σ invariant under g.
QPoly quotient_char_poly(const FanAction& a, std::size_t element, std::size_t cone);

}  // namespace fanchar
