#include "fanchar/charformula/charformula.hpp"

#include <map>
#include <ostream>

#include "fanchar/error.hpp"
#include "fanchar/exact/linalg.hpp"

namespace fanchar {

namespace {

void require_complete_simplicial(const FanAction& a) {
  if (!a.complete_simplicial()) throw PreconditionError("fan is not complete and simplicial");
}

void require_nonnegative_integral(const QPoly& p, const char* what) {
  if (!p.has_integer_coefficients() || !p.has_nonnegative_coefficients()) {
    throw TheoremViolation(std::string(what) + " has a negative or fractional coefficient: " + p.str());
  }
}

std::vector<std::vector<unsigned>> exponent_vectors(std::size_t vars, std::size_t degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(vars, 0);
  // Lexicographically decreasing in the first variable.
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == vars) {
      cur[i] = static_cast<unsigned>(left);
      out.push_back(cur);
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      cur[i] = static_cast<unsigned>(e);
      self(self, i + 1, left - e);
    }
  };
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

QPoly h_polynomial(const Fan& f, std::ostream* warn) {
  if (warn && !is_simplicial(f)) *warn << "warning: h-polynomial of a non-simplicial fan\n";
  const auto fv = f_vector(f);
  const std::size_t d = f.dim();
  QPoly h;
  for (std::size_t i = 0; i <= d; ++i) {
    h += Rational(static_cast<long>(fv[i])) * QPoly::linear_power(Rational(1), d - i);
  }
  return h;
}

QPoly quotient_char_poly(const FanAction& a, std::size_t element, std::size_t cone) {
  return det_poly(quotient_matrix(a.group().element(element), a.fan().generators(cone)));
}

QPoly char_fixed_cones(const FanAction& a, std::size_t element) {
  require_complete_simplicial(a);
  QPoly total;
  for (std::size_t c = 0; c < a.fan().num_cones(); ++c) {
    if (a.cone_image(element, c) == c) total += quotient_char_poly(a, element, c);
  }
  return total;
}

QPoly char_maschke(const FanAction& a, std::size_t element) {
  require_complete_simplicial(a);
  const QMatrix& g = a.group().element(element);
  const QPoly whole = det_one_minus_t(g);
  QPoly total;
  for (std::size_t c = 0; c < a.fan().num_cones(); ++c) {
    if (a.cone_image(element, c) != c) continue;
    const auto gens = a.fan().generators(c);
    const QPoly sub = gens.empty() ? QPoly{1} : det_one_minus_t(restrict_matrix(g, gens));
    total += QPoly::monomial(a.fan().cone(c).dim) * poly_exact_div(whole, sub);
  }
  return total;
}

GradedCharacter equivariant_h_series(const FanAction& a, std::size_t full_sum_limit) {
  require_complete_simplicial(a);
  const MatrixGroup& grp = a.group();
  const std::size_t n = grp.order();
  const std::size_t cones = a.fan().num_cones();
  std::vector<std::vector<std::optional<QPoly>>> chi(cones, std::vector<std::optional<QPoly>>(n));
  auto character = [&](std::size_t cone, std::size_t x) -> const QPoly& {
    auto& slot = chi[cone][x];
    if (!slot) slot = quotient_char_poly(a, x, cone);
    return *slot;
  };
  const bool full = cones * n <= full_sum_limit;

  GradedCharacter out;
  for (const auto& cls : grp.classes()) {
    const std::size_t g = cls.front();
    out.representatives.push_back(g);
    out.class_sizes.push_back(cls.size());
    std::vector<std::size_t> conj(n);
    for (std::size_t h = 0; h < n; ++h) conj[h] = grp.product(grp.product(grp.inverse_of(h), g), h);

    // Orbit form: Σ over representatives of Ind_{G_σ}^G(χ_σ)(g).
    QPoly orbit_sum;
    for (const auto& orbit : a.cone_orbits()) {
      const std::size_t s = orbit.front();
      QPoly acc;
      std::size_t stab = 0;
      for (std::size_t h = 0; h < n; ++h) {
        if (a.cone_image(h, s) == s) ++stab;
        if (a.cone_image(conj[h], s) == s) acc += character(s, conj[h]);
      }
      orbit_sum += Rational(1, static_cast<long>(stab)) * acc;
    }
    if (full) {
      QPoly all;
      for (std::size_t s = 0; s < cones; ++s) {
        for (std::size_t h = 0; h < n; ++h) {
          if (a.cone_image(conj[h], s) == s) all += character(s, conj[h]);
        }
      }
      all = Rational(1, static_cast<long>(n)) * all;
      if (all != orbit_sum) {
        throw TheoremViolation("orbit form " + orbit_sum.str() + " differs from the full Frobenius sum " + all.str());
      }
    }
    const QPoly fixed = char_fixed_cones(a, g);
    if (orbit_sum != fixed) {
      throw TheoremViolation("Frobenius evaluation " + orbit_sum.str() + " differs from the fixed-cone sum " +
                             fixed.str() + " at element " + std::to_string(g));
    }
    out.values.push_back(std::move(orbit_sum));
  }
  return out;
}

Rational sym_trace(const QMatrix& g, std::size_t k) {
  const std::size_t d = g.rows();
  using Poly = std::map<std::vector<unsigned>, Rational>;
  Rational trace;
  for (const auto& a : exponent_vectors(d, k)) {
    Poly image{{std::vector<unsigned>(d, 0), Rational(1)}};
    for (std::size_t i = 0; i < d; ++i) {
      for (unsigned e = 0; e < a[i]; ++e) {
        Poly next;
        for (const auto& [mono, c] : image) {
          for (std::size_t j = 0; j < d; ++j) {
            if (g(j, i).is_zero()) continue;
            auto m = mono;
            ++m[j];
            next[m] += c * g(j, i);
          }
        }
        image = std::move(next);
      }
    }
    auto it = image.find(a);
    if (it != image.end()) trace += it->second;
  }
  return trace;
}

bool sym_trace_check(const QMatrix& g, std::size_t k_max) {
  const auto series = series_inverse(det_one_minus_t(g), k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (sym_trace(g, k) != series[k]) return false;
  }
  return true;
}

Rational ext_trace(const QMatrix& g, std::size_t k) {
  const auto basis = subsets_of_size(g.rows(), k);
  QMatrix induced(basis.size(), basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    for (std::size_t t = 0; t < basis.size(); ++t) {
      induced(t, s) = k == 0 ? Rational(1) : determinant(g.submatrix(basis[t], basis[s]));
    }
  }
  return induced.trace();
}

bool ext_trace_check(const QMatrix& g) {
  const std::size_t d = g.rows();
  const QPoly p = det_poly(g);
  for (std::size_t m = 0; m <= d; ++m) {
    Rational expected = ext_trace(g, d - m);
    if ((d - m) % 2) expected = -expected;
    if (p.coeff(m) != expected) return false;
  }
  return true;
}

QPoly invariant_poincare_avg(const FanAction& a) {
  require_complete_simplicial(a);
  QPoly total;
  for (const auto& cls : a.group().classes()) {
    total += Rational(static_cast<long>(cls.size())) * char_fixed_cones(a, cls.front());
  }
  total = Rational(1, static_cast<long>(a.group().order())) * total;
  require_nonnegative_integral(total, "invariant Poincaré polynomial");
  return total;
}

QPoly invariant_poincare_orbit(const FanAction& a, const RootSystem& rs) {
  require_complete_simplicial(a);
  QPoly total;
  for (auto s : orbit_representatives_in_D(a, rs)) {
    const auto stab = a.stabilizer_indices(s);
    QPoly acc;
    for (auto w : stab) acc += quotient_char_poly(a, w, s);
    total += Rational(1, static_cast<long>(stab.size())) * acc;
  }
  const QPoly avg = invariant_poincare_avg(a);
  if (total != avg) {
    throw TheoremViolation("orbit route " + total.str() + " differs from the averaging route " + avg.str());
  }
  return total;
}

QPoly orbit_contribution(const FanAction& a, const RootSystem& rs, std::size_t cone) {
  const auto pd = parabolic_data(a, rs, cone);
  const long d = static_cast<long>(a.fan().dim());
  const long triv = d - static_cast<long>(pd.i.size()) - static_cast<long>(pd.k.size());
  if (triv < 0) throw TheoremViolation("negative trivial dimension at " + to_string(a.fan().cone(cone)));
  return QPoly::monomial(pd.k.size() - pd.j0.size()) *
         QPoly::linear_power(Rational(1), static_cast<std::size_t>(triv));
}

QPoly invariant_poincare_closed(const FanAction& a, const RootSystem& rs) {
  QPoly total;
  for (auto s : orbit_representatives_in_D(a, rs)) total += orbit_contribution(a, rs, s);
  return total;
}

}  // namespace fanchar
