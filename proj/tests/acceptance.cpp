// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fanchar/charformula/charformula.hpp"
#include "fanchar/corpus/corpus.hpp"
#include "fanchar/error.hpp"
#include "fanchar/hybrid/hybrid.hpp"
#include "fanchar/srring/srring.hpp"

using namespace fanchar;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::string label(const Instance& i) { return i.fan + " / " + i.group; }

struct Prepared {
  Instance inst;
  RootSystem rs;
  FanAction action;
  ArtinianTable table;
};

const std::vector<Prepared>& prepared() {
  static const std::vector<Prepared> all = [] {
    std::vector<Prepared> out;
    for (const auto& inst : reflection_instances()) {
      RootSystem rs = corpus_root_system(inst.group);
      FanAction a = bind_action(rs.group, corpus_fan(inst.fan));
      ArtinianTable tab = artinian_table(a, 3);
      out.push_back({inst, std::move(rs), std::move(a), std::move(tab)});
    }
    return out;
  }();
  return all;
}

bool criterion_octahedron() {
  const auto start = std::chrono::steady_clock::now();
  const HybridFan h = build_hybrid_naive(normal_fan(cross_polytope(3)), sign_system(3));
  const StructureReport s = check_structure(h);
  require(s.valid && s.complete && s.simplicial, "hybrid fan structure");
  const std::set<QVector> rays(h.fan.rays().begin(), h.fan.rays().end());
  require(rays == std::set<QVector>{make_vector({1, 1, 1}), make_vector({-1, 0, 0}), make_vector({0, -1, 0}),
                                    make_vector({0, 0, -1})},
          "ray set");
  require(h.fan.maximal_cones().size() == 4, "four maximal cones");
  require(h_polynomial(h.fan) == QPoly{1, 1, 1, 1}, "h-polynomial 1+t+t^2+t^3");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return true;
}

bool criterion_characters() {
  for (const auto& p : prepared()) {
    const GradedCharacter c = equivariant_h_series(p.action);
    require(c.values.size() == p.rs.group.classes().size(), label(p.inst) + ": class count");
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      const std::size_t g = c.representatives[k];
      const QPoly oracle = oracle_character(p.table, g);
      require(oracle == c.values[k], label(p.inst) + ": oracle vs Frobenius on class " + std::to_string(k));
      require(char_fixed_cones(p.action, g) == oracle, label(p.inst) + ": fixed cones");
      require(char_maschke(p.action, g) == oracle, label(p.inst) + ": Maschke form");
    }
  }
  return true;
}

bool criterion_dehn_sommerville() {
  for (const auto& p : prepared()) {
    const std::size_t d = p.action.fan().dim();
    for (std::size_t g = 0; g < p.rs.group.order(); ++g) {
      const QPoly c = oracle_character(p.table, g);
      require(c.degree() == static_cast<long>(d) && poly_is_palindromic(c, d),
              label(p.inst) + ": character not palindromic of degree d");
    }
    require(socle_check(p.table), label(p.inst) + ": socle");
  }
  return true;
}

bool criterion_invariants() {
  std::map<std::pair<std::string, std::string>, QPoly> seen;
  for (const auto& p : prepared()) {
    const QPoly avg = invariant_poincare_avg(p.action);
    QPoly oracle;
    for (std::size_t g = 0; g < p.rs.group.order(); ++g) oracle += oracle_character(p.table, g);
    oracle *= Rational(1, static_cast<long>(p.rs.group.order()));
    const QPoly orbit = invariant_poincare_orbit(p.action, p.rs);
    const QPoly closed = invariant_poincare_closed(p.action, p.rs);
    const HybridFan fast = build_hybrid_fast(p.action.fan(), p.rs);
    require(same_hybrid(fast, build_hybrid_naive(p.action.fan(), p.rs)), label(p.inst) + ": builders differ");
    const QPoly hybrid = h_polynomial(fast.fan);
    require(avg == oracle && orbit == oracle && closed == oracle && hybrid == oracle,
            label(p.inst) + ": routes disagree");
    seen[{p.inst.fan, p.inst.group}] = hybrid;
  }
  require(seen.at({"quadrant", "B2"}) == QPoly{1, 1, 1}, "quadrant + B2");
  require(seen.at({"octant3", "sign3"}) == QPoly{1, 3, 3, 1}, "octant + sign group");
  require(seen.at({"octant3", "B3"}) == QPoly{1, 1, 1, 1}, "octant + B3");
  return true;
}

bool criterion_polytopal() {
  const auto start = std::chrono::steady_clock::now();
  require(polytopal_check(corpus_polytope("octahedron"), sign_system(3)), "octahedron");
  require(polytopal_check(corpus_polytope("square"), sign_system(2)), "square");
  require(polytopal_check(corpus_polytope("hexagon"), type_a(2)), "hexagon");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 30.0, "runtime");
  return true;
}

bool criterion_eulerian() {
  const std::vector<std::pair<std::string, QPoly>> rows{{"coxeter-A2", QPoly{1, 4, 1}},
                                                        {"coxeter-A3", QPoly{1, 11, 11, 1}}};
  for (const auto& [name, expected] : rows) {
    const Fan f = corpus_fan(name);
    require(h_polynomial(f) == expected, name + ": h-polynomial");
    const auto dims = artinian_table(f, 0).quotient_dims();
    for (std::size_t i = 0; i < dims.size(); ++i) {
      require(expected.coeff(i) == Rational(static_cast<long>(dims[i])), name + ": Artinian dimension");
    }
  }
  return true;
}

std::vector<std::string> all_group_names() {
  std::vector<std::string> out{"trivial1", "trivial2", "trivial3", "sign2", "sign3"};
  for (const char* base : {"A2", "A3", "B2", "B3", "B4"}) {
    for (const auto& n : parabolic_names(base)) out.push_back(n);
  }
  return out;
}

bool criterion_lemmas() {
  for (const auto& name : all_group_names()) {
    const MatrixGroup& g = corpus_root_system(name).group;
    for (std::size_t e = 0; e < g.order(); ++e) {
      const QMatrix& m = g.element(e);
      require(sym_trace_check(m, m.rows() + 3), name + ": symmetric power traces");
      require(ext_trace_check(m), name + ": exterior power traces");
    }
  }
  for (const auto& name : corpus_fan_names()) {
    const Fan f = corpus_fan(name);
    if (!is_simplicial(f) || !is_complete(f)) continue;
    require(volume_element_check(f).ok, name + ": volume element");
  }
  for (const auto& p : prepared()) {
    const std::size_t d = p.action.fan().dim();
    const auto q = p.table.quotient_dims();
    for (std::size_t k = 0; k <= d + 3; ++k) {
      // dim A_k = Σ_j dim Ā_j · C(k − j + d − 1, d − 1)
      Rational predicted;
      for (std::size_t j = 0; j <= std::min(k, d); ++j) {
        Rational c(1);
        for (std::size_t i = 1; i < d; ++i) c = c * Rational(static_cast<long>(k - j + i)) / Rational(static_cast<long>(i));
        predicted += Rational(static_cast<long>(q[j])) * c;
      }
      require(predicted == Rational(static_cast<long>(p.table.ambient_dims[k])), label(p.inst) + ": Hilbert identity");
      for (std::size_t g = 0; g < p.rs.group.order(); ++g) {
        Rational sum;
        for (std::size_t j = 0; j <= std::min(k, d); ++j) {
          sum += p.table.pieces[j].traces[g] * sym_trace(p.rs.group.element(g), k - j);
        }
        require(sum == p.table.ambient_traces[k][g], label(p.inst) + ": trace identity in degree " + std::to_string(k));
      }
    }
  }
  return true;
}

bool criterion_structure() {
  std::set<std::string> moreau_done;
  for (const auto& p : prepared()) {
    const auto reps = orbit_representatives_in_D(p.action, p.rs);
    std::set<std::size_t> orbits;
    for (auto r : reps) orbits.insert(p.action.orbit_of(r));
    require(reps.size() == p.action.cone_orbits().size() && orbits.size() == reps.size(),
            label(p.inst) + ": one representative per orbit");
    const auto mismatch = stabilizer_mismatch(p.action);
    require(!mismatch, label(p.inst) + ": " + mismatch.value_or(""));
    const auto wall = wall_invariance_failure(p.action, p.rs);
    require(!wall, label(p.inst) + ": " + wall.value_or(""));

    if (moreau_done.insert(p.inst.group).second) {
      RandomRationals rng(2024);
      for (int i = 0; i < 100; ++i) {
        const QVector v = rng.vector(p.rs.space.dim());
        const MoreauPair m = moreau(v, p.rs);
        QVector vn = zero_vector(v.size());
        for (std::size_t k = 0; k < p.rs.rank(); ++k) {
          require(m.coeffs[k].sign() >= 0, p.inst.group + ": Moreau coefficient sign");
          vn = vn - m.coeffs[k] * p.rs.simple_roots[k];
        }
        require(m.v_d + m.v_n == v && vn == m.v_n && in_fundamental_domain(p.rs, m.v_d) &&
                    p.rs.space.inner(m.v_d, m.v_n).is_zero(),
                p.inst.group + ": Moreau decomposition");
      }
    }

    const HybridFan h = build_hybrid_fast(p.action.fan(), p.rs);
    RandomRationals rng(77);
    for (int i = 0; i < 100; ++i) {
      const QVector v = rng.vector(p.rs.space.dim());
      require(locate_in_hybrid(h, p.rs, v) == point_locate(h.fan, v), label(p.inst) + ": hybrid point location");
    }
  }
  return true;
}

bool criterion_properness() {
  for (const char* name : {"A2", "A3", "B2", "B3"}) {
    const RootSystem rs = corpus_root_system(name);
    require(is_proper(bind_action(rs.group, coxeter_fan(rs))), std::string(name) + ": Coxeter fan action proper");
  }
  const RootSystem b2 = type_b(2);
  const FanAction a = bind_action(b2.group, corpus_fan("quadrant"));
  require(!is_proper(a), "B2 on the quadrant is reported proper");
  const auto w = properness_witness(a);
  require(w.has_value(), "no witness");
  // Exhaustive search for elements fixing a cone setwise but not pointwise.
  std::set<std::pair<std::size_t, std::size_t>> witnesses;
  for (std::size_t g = 0; g < b2.group.order(); ++g) {
    for (std::size_t c = 0; c < a.fan().num_cones(); ++c) {
      if (a.cone_image(g, c) != c) continue;
      for (auto r : a.fan().cone(c).rays) {
        if (a.ray_image(g, r) != r) witnesses.insert({g, c});
      }
    }
  }
  require(witnesses.count(*w) == 1, "reported witness is not a witness");
  const auto swap = b2.group.index_of(QMatrix{{0, 1}, {1, 0}});
  const auto first_quadrant = a.fan().find_cone({0, 1});
  require(swap && first_quadrant && witnesses.count({*swap, *first_quadrant}), "swap on cone(e1, e2)");
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"octahedron hybrid fan is the 4-ray simplex fan with h = 1+t+t^2+t^3", criterion_octahedron},
      {"equivariant h-series: oracle = fixed cones = Maschke = Frobenius on all instances", criterion_characters},
      {"equivariant Dehn-Sommerville: palindromic characters and one-dimensional trivial socle", criterion_dehn_sommerville},
      {"hybrid h-polynomial = invariant Poincare polynomial by all four routes", criterion_invariants},
      {"quotient polytope normal fans match hybrid fans", criterion_polytopal},
      {"Coxeter fans of A2 and A3 have Eulerian h-polynomials", criterion_eulerian},
      {"trace lemmas, volume element, Hilbert identity and trace identity through degree d+3", criterion_lemmas},
      {"orbit representatives, stabilizers, wall invariance, Moreau splits and hybrid point location", criterion_structure},
      {"properness detection", criterion_properness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << secs << " s)";
    if (!ok) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    failed += !ok;
  }
  return failed ? 1 : 0;
}
