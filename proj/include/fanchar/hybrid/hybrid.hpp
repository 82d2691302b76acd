#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fanchar/exact/qpoly.hpp"
#include "fanchar/fan/fan.hpp"
#include "fanchar/fan/polytope.hpp"
#include "fanchar/symmetry/root_system.hpp"

namespace fanchar {

struct HybridRay {
  enum class Kind { kRho, kTau };
  Kind kind;
  std::size_t source;  // source ray index (ρ) or simple-root index (τ)
};

/// The (I, J) pair of a hybrid cone and the source cone σ'_{I,J}.
struct HybridCell {
  std::vector<std::size_t> i;  // source ray indices
  std::vector<std::size_t> j;  // simple-root indices
  std::size_t source_cone = 0;
};

/// Rays: the source rays in D (source order), then τ_j = −α_j.
struct HybridFan {
  Fan fan;
  std::vector<HybridRay> labels;
  std::vector<HybridCell> provenance;  // per cone of `fan`
  Fan source;
};

/// Enumerates (I, J) with I inside a single cone's D-rays and keeps σ_{I,J}
/// when cone(W_J·{ρ_i}) is a cone of the source fan.
HybridFan build_hybrid_naive(const Fan& f, const RootSystem& rs);

/// Emits σ_{I,J} for J0 ⊆ J ⊆ K per orbit representative. Requires a
/// complete simplicial source.
HybridFan build_hybrid_fast(const Fan& f, const RootSystem& rs);

/// Same rays in the same order and the same cones with the same provenance.
bool same_hybrid(const HybridFan& a, const HybridFan& b);

/// The hybrid cone with v in its relative interior, found from the Moreau
/// split of v. Throws TheoremViolation when no candidate contains v.
std::size_t locate_in_hybrid(const HybridFan& h, const RootSystem& rs, const QVector& v);

struct StructureReport {
  bool valid = false;
  bool complete = false;
  bool simplicial = false;
  bool source_simplicial = false;
  std::string detail;
};

StructureReport check_structure(const HybridFan& h);

struct TheoremReport {
  QPoly hybrid_h;
  QPoly average;
  QPoly orbit;
  QPoly closed_form;
  std::optional<QPoly> oracle;
  bool builders_agree = false;
  bool all_equal() const;
};

/// h(Σ_W) against the invariant Poincaré polynomial by every route. Throws
/// TheoremViolation with the full report text on any mismatch.
TheoremReport theorem_check(const Fan& f, const RootSystem& rs, bool with_oracle = true);

std::string to_string(const TheoremReport& r);

/// P ∩ D from the facets of P and the walls of D.
Polytope quotient_polytope(const Polytope& p, const RootSystem& rs);

/// normal_fan(P ∩ D) equals the naive hybrid of normal_fan(P), matching
/// rays by direction and comparing cones as ray sets.
bool polytopal_check(const Polytope& p, const RootSystem& rs);

}  // namespace fanchar
