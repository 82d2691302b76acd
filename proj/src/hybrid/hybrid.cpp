#include "fanchar/hybrid/hybrid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fanchar/charformula/charformula.hpp"
#include "fanchar/error.hpp"
#include "fanchar/exact/lp.hpp"
#include "fanchar/srring/srring.hpp"
#include "fanchar/symmetry/action.hpp"

namespace fanchar {

namespace {

struct Skeleton {
  std::vector<QVector> rays;
  std::vector<HybridRay> labels;
  std::map<std::size_t, std::size_t> of_source;  // source ray → hybrid ray
  std::size_t tau_offset = 0;
};

Skeleton skeleton(const Fan& f, const RootSystem& rs) {
  Skeleton s;
  for (std::size_t r = 0; r < f.num_rays(); ++r) {
    if (!in_fundamental_domain(rs, f.ray(r))) continue;
    s.of_source[r] = s.rays.size();
    s.rays.push_back(f.ray(r));
    s.labels.push_back({HybridRay::Kind::kRho, r});
  }
  s.tau_offset = s.rays.size();
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    s.rays.push_back(-rs.simple_roots[j]);
    s.labels.push_back({HybridRay::Kind::kTau, j});
  }
  return s;
}

std::vector<std::size_t> hybrid_rays(const Skeleton& s, const std::vector<std::size_t>& i,
                                     const std::vector<std::size_t>& j) {
  std::vector<std::size_t> out;
  for (auto r : i) out.push_back(s.of_source.at(r));
  for (auto k : j) out.push_back(s.tau_offset + k);
  std::sort(out.begin(), out.end());
  return out;
}

HybridFan assemble(const Fan& f, const RootSystem& rs, const Skeleton& s,
                   std::map<std::vector<std::size_t>, HybridCell> cells) {
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& [rays, cell] : cells) cones.push_back(rays);
  HybridFan h;
  h.fan = Fan(rs.space, s.rays, std::move(cones));
  h.labels = s.labels;
  h.source = f;
  for (const auto& c : h.fan.cones()) h.provenance.push_back(cells.at(c.rays));
  return h;
}

std::vector<std::vector<std::size_t>> subsets(const std::vector<std::size_t>& items) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t b = 0; b < items.size(); ++b) {
      if (mask >> b & 1) s.push_back(items[b]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

HybridFan build_hybrid_naive(const Fan& f, const RootSystem& rs) {
  bind_action(rs.group, f);
  const Skeleton s = skeleton(f, rs);
  const std::size_t d = f.dim();

  std::set<std::vector<std::size_t>> candidate_i;
  for (const auto& c : f.cones()) {
    std::vector<std::size_t> in_d;
    for (auto r : c.rays) {
      if (s.of_source.count(r)) in_d.push_back(r);
    }
    for (auto& sub : subsets(in_d)) candidate_i.insert(std::move(sub));
  }
  std::vector<std::size_t> all_roots(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) all_roots[j] = j;

  std::map<std::vector<std::size_t>, HybridCell> cells;
  for (const auto& j : subsets(all_roots)) {
    const MatrixGroup wj = parabolic(rs, j);
    for (const auto& i : candidate_i) {
      std::set<std::size_t> orbit;
      for (const auto& w : wj.elements()) {
        for (auto r : i) {
          auto img = f.find_ray(w * f.ray(r));
          FANCHAR_ASSERT(img.has_value(), "invariant fan maps a ray to a non-ray");
          orbit.insert(*img);
        }
      }
      std::vector<std::size_t> orbit_rays(orbit.begin(), orbit.end());
      std::vector<QVector> gens;
      for (auto r : orbit_rays) gens.push_back(f.ray(r));
      std::vector<std::size_t> extreme;
      for (auto k : irredundant_generators(gens, d)) extreme.push_back(orbit_rays[k]);
      auto match = f.find_cone(extreme);
      if (!match) continue;
      cells.emplace(hybrid_rays(s, i, j), HybridCell{i, j, *match});
    }
  }
  return assemble(f, rs, s, std::move(cells));
}

HybridFan build_hybrid_fast(const Fan& f, const RootSystem& rs) {
  const FanAction a = bind_action(rs.group, f);
  if (!a.complete_simplicial()) throw PreconditionError("fast hybrid builder needs a complete simplicial fan");
  const Skeleton s = skeleton(f, rs);
  std::map<std::vector<std::size_t>, HybridCell> cells;
  for (auto rep : orbit_representatives_in_D(a, rs)) {
    const auto pd = parabolic_data(a, rs, rep);
    std::vector<std::size_t> free;
    for (auto k : pd.k) {
      if (!std::binary_search(pd.j0.begin(), pd.j0.end(), k)) free.push_back(k);
    }
    for (const auto& extra : subsets(free)) {
      std::vector<std::size_t> j = pd.j0;
      j.insert(j.end(), extra.begin(), extra.end());
      std::sort(j.begin(), j.end());
      auto [it, inserted] = cells.emplace(hybrid_rays(s, pd.i, j), HybridCell{pd.i, j, rep});
      if (!inserted) {
        throw TheoremViolation("hybrid cone " + to_string(Cone{it->first, 0}) + " arises from two orbits");
      }
    }
  }
  return assemble(f, rs, s, std::move(cells));
}

bool same_hybrid(const HybridFan& a, const HybridFan& b) {
  if (a.fan.num_rays() != b.fan.num_rays() || a.fan.num_cones() != b.fan.num_cones()) return false;
  for (std::size_t r = 0; r < a.fan.num_rays(); ++r) {
    if (primitive_direction(a.fan.ray(r)) != primitive_direction(b.fan.ray(r))) return false;
  }
  for (std::size_t c = 0; c < a.fan.num_cones(); ++c) {
    if (a.fan.cone(c) != b.fan.cone(c)) return false;
    const auto& pa = a.provenance[c];
    const auto& pb = b.provenance[c];
    if (pa.i != pb.i || pa.j != pb.j || pa.source_cone != pb.source_cone) return false;
  }
  return true;
}

std::size_t locate_in_hybrid(const HybridFan& h, const RootSystem& rs, const QVector& v) {
  const std::size_t d = h.fan.dim();
  const MoreauPair split = moreau(v, rs);
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < split.coeffs.size(); ++k) {
    if (split.coeffs[k].sign() > 0) support.push_back(k);
  }
  auto sigma = point_locate(h.source, split.v_d);
  if (!sigma) throw TheoremViolation("v_D of " + to_string(v) + " is not covered by the source fan");
  const auto& rays = h.source.cone(*sigma).rays;
  for (std::size_t c = 0; c < h.fan.num_cones(); ++c) {
    const auto& cell = h.provenance[c];
    if (!std::includes(rays.begin(), rays.end(), cell.i.begin(), cell.i.end())) continue;
    if (!std::includes(cell.j.begin(), cell.j.end(), support.begin(), support.end())) continue;
    if (in_relative_interior(h.fan.generators(c), v, d)) return c;
  }
  throw TheoremViolation("no hybrid cone over the Moreau split of " + to_string(v) + " contains it");
}

StructureReport check_structure(const HybridFan& h) {
  StructureReport r;
  const auto report = validate_fan(h.fan);
  r.valid = report.ok();
  r.complete = is_complete(h.fan);
  r.simplicial = is_simplicial(h.fan);
  r.source_simplicial = is_simplicial(h.source);
  if (!r.valid) r.detail = report.summary();
  return r;
}

bool TheoremReport::all_equal() const {
  return builders_agree && hybrid_h == average && average == orbit && orbit == closed_form &&
         (!oracle || *oracle == hybrid_h);
}

std::string to_string(const TheoremReport& r) {
  std::ostringstream os;
  os << "hybrid h: " << r.hybrid_h << "\naverage: " << r.average << "\norbit: " << r.orbit
     << "\nclosed form: " << r.closed_form;
  if (r.oracle) os << "\noracle: " << *r.oracle;
  os << "\nbuilders agree: " << (r.builders_agree ? "yes" : "no");
  return os.str();
}

TheoremReport theorem_check(const Fan& f, const RootSystem& rs, bool with_oracle) {
  const FanAction a = bind_action(rs.group, f);
  if (!a.complete_simplicial()) throw PreconditionError("theorem check needs a complete simplicial fan");
  TheoremReport r;
  const HybridFan fast = build_hybrid_fast(f, rs);
  r.builders_agree = same_hybrid(fast, build_hybrid_naive(f, rs));
  r.hybrid_h = h_polynomial(fast.fan);
  r.average = invariant_poincare_avg(a);
  r.orbit = invariant_poincare_orbit(a, rs);
  r.closed_form = invariant_poincare_closed(a, rs);
  if (with_oracle) {
    const ArtinianTable tab = artinian_table(a);
    QPoly sum;
    for (std::size_t g = 0; g < a.group().order(); ++g) sum += oracle_character(tab, g);
    r.oracle = Rational(1, static_cast<long>(a.group().order())) * sum;
  }
  if (!r.all_equal()) throw TheoremViolation("invariant Poincaré routes disagree:\n" + to_string(r));
  return r;
}

Polytope quotient_polytope(const Polytope& p, const RootSystem& rs) {
  if (!(p.space == rs.space)) throw DimensionError("polytope and root system live in different spaces");
  const std::set<QVector> verts(p.vertices.begin(), p.vertices.end());
  for (const auto& s : rs.simple_reflections) {
    for (const auto& v : p.vertices) {
      if (!verts.count(s * v)) throw InvarianceError("polytope is not invariant under the reflection group");
    }
  }
  std::vector<QVector> a;
  QVector b;
  for (const auto& f : facets(p)) {
    a.push_back(f.normal);
    b.push_back(f.offset);
  }
  for (const auto& alpha : rs.simple_roots) {
    a.push_back(-rs.space.functional_of(alpha));
    b.push_back(Rational(0));
  }
  return make_polytope(p.space, vertices_of_inequalities(a, b, p.space.dim()));
}

bool polytopal_check(const Polytope& p, const RootSystem& rs) {
  const Fan quotient = normal_fan(quotient_polytope(p, rs));
  const HybridFan h = build_hybrid_naive(normal_fan(p), rs);
  if (quotient.num_rays() != h.fan.num_rays() || quotient.num_cones() != h.fan.num_cones()) return false;
  std::vector<std::size_t> to_quotient;
  for (const auto& ray : h.fan.rays()) {
    auto r = quotient.find_ray(ray);
    if (!r) return false;
    to_quotient.push_back(*r);
  }
  std::set<std::vector<std::size_t>> mapped;
  for (const auto& c : h.fan.cones()) {
    std::vector<std::size_t> rays;
    for (auto r : c.rays) rays.push_back(to_quotient[r]);
    std::sort(rays.begin(), rays.end());
    mapped.insert(std::move(rays));
  }
  for (const auto& c : quotient.cones()) {
    if (!mapped.count(c.rays)) return false;
  }
  return true;
}

}  // namespace fanchar
