#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanchar/exact/linalg.hpp"
#include "fanchar/exact/qpoly.hpp"
#include "fanchar/fan/fan.hpp"
#include "fanchar/symmetry/action.hpp"

namespace fanchar {

/// Sparse exponent vector: (ray index, positive exponent), sorted by ray.
struct Monomial {
  std::vector<std::pair<std::size_t, unsigned>> exponents;

  std::size_t degree() const;
  std::vector<std::size_t> support() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

struct GradedBasis {
  std::size_t degree = 0;
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;
};

/// Monomials of degree k supported on cones; cone order, then exponents
/// in lexicographic order.
GradedBasis graded_basis(const Fan& f, std::size_t k);

/// Σ_σ C(k−1, dim σ−1) over nonzero cones (1 for k = 0).
std::size_t graded_dimension(const Fan& f, std::size_t k);

/// d × n matrix: row j holds Ψ(θ_j) = Σ_i (v_i)_j x_i.
QMatrix lsop(const Fan& f);

/// Row j of lsop(f) as a readable linear form.
std::string lsop_form(const QMatrix& l, std::size_t j);

struct DegreePiece {
  GradedBasis basis;
  RowEchelon ideal;           // rows span the degree-k piece of the lsop ideal
  std::size_t quotient_dim = 0;
  std::vector<Rational> traces;  // per group element, on the quotient
};

struct ArtinianTable {
  Fan fan;
  std::optional<FanAction> action;
  std::vector<DegreePiece> pieces;  // degrees 0..d
  /// dim A_k and per-element traces on A_k for k = 0..d+extra.
  std::vector<std::size_t> ambient_dims;
  std::vector<std::vector<Rational>> ambient_traces;

  std::size_t dim() const { return fan.dim(); }
  std::vector<std::size_t> quotient_dims() const;
};

/// Without an action only the identity traces are recorded.
ArtinianTable artinian_table(const Fan& f, std::size_t extra = 3);
ArtinianTable artinian_table(const FanAction& a, std::size_t extra = 3);

/// Σ_k trace(g, Ā^k) t^k.
QPoly oracle_character(const ArtinianTable& tab, std::size_t element);

/// dim Ā^d = 1 and every element acts trivially on it.
bool socle_check(const ArtinianTable& tab);

struct VolumeCheck {
  bool ok = true;
  std::optional<std::size_t> bad_ridge;
};

/// det(v_τ, v_ρ)·x_{σ1} + det(v_τ, v_ρ')·x_{σ2} ∈ ideal for every ridge τ.
VolumeCheck volume_element_check(const Fan& f);
VolumeCheck volume_element_check(const Fan& f, const ArtinianTable& tab);

/// True iff v lies in the row space of the echelon form.
bool in_row_space(const RowEchelon& e, const QVector& v);

}  // namespace fanchar
