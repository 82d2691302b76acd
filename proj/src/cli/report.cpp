#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <thread>

#include "fanchar/charformula/charformula.hpp"
#include "fanchar/cli/cli.hpp"
#include "fanchar/error.hpp"
#include "fanchar/srring/srring.hpp"
#include "fanchar/symmetry/action.hpp"

namespace fanchar {

namespace {

bool contains(const std::vector<std::string>& names, const std::string& s) {
  return std::find(names.begin(), names.end(), s) != names.end();
}

}  // namespace

Fan resolve_fan(const std::string& arg) {
  if (std::filesystem::exists(arg)) return fan_from_json(read_json_file(arg));
  if (contains(corpus_fan_names(), arg)) return corpus_fan(arg);
  throw InputError("no fan file or corpus fan named " + arg);
}

LoadedGroup resolve_group(const std::string& arg, const AmbientSpace* fallback) {
  if (std::filesystem::exists(arg)) return group_from_json(read_json_file(arg), fallback);
  RootSystem rs = corpus_root_system(arg);
  MatrixGroup g = rs.group;
  return LoadedGroup{std::move(g), std::move(rs)};
}

Polytope resolve_polytope(const std::string& arg) {
  if (std::filesystem::exists(arg)) return polytope_from_json(read_json_file(arg));
  if (contains(corpus_polytope_names(), arg)) return corpus_polytope(arg);
  throw InputError("no polytope file or corpus polytope named " + arg);
}

Json verify_report(const Fan& f, const LoadedGroup& g, bool with_oracle) {
  const FanAction a = bind_action(g.group, f);
  if (!a.complete_simplicial()) throw PreconditionError("verify needs a complete simplicial fan");
  const std::size_t d = f.dim();
  const std::size_t order = g.group.order();
  std::vector<std::string> failures;

  Json out;
  out["dim"] = d;
  out["f_vector"] = f_vector(f);
  out["group_order"] = order;
  const QPoly h = h_polynomial(f);
  out["h"] = to_json(h);

  std::optional<ArtinianTable> tab;
  if (with_oracle) tab = artinian_table(a);

  const GradedCharacter chars = equivariant_h_series(a);
  Json classes = Json::array();
  QPoly average;
  for (std::size_t c = 0; c < chars.values.size(); ++c) {
    const std::size_t rep = chars.representatives[c];
    const QPoly fixed = char_fixed_cones(a, rep);
    const QPoly maschke = char_maschke(a, rep);
    const QPoly& frob = chars.values[c];
    Json e;
    e["size"] = chars.class_sizes[c];
    e["representative"] = to_json(g.group.element(rep));
    e["fixed_cones"] = to_json(fixed);
    e["maschke"] = to_json(maschke);
    e["frobenius"] = to_json(frob);
    bool agree = fixed == maschke && maschke == frob;
    if (tab) {
      const QPoly oracle = oracle_character(*tab, rep);
      e["oracle"] = to_json(oracle);
      agree = agree && oracle == frob;
    }
    const bool palindromic = poly_is_palindromic(frob, d);
    e["palindromic"] = palindromic;
    e["agree"] = agree;
    if (!agree) failures.push_back("character routes disagree on class " + std::to_string(c));
    if (!palindromic) failures.push_back("character of class " + std::to_string(c) + " is not palindromic");
    average += Rational(static_cast<long>(chars.class_sizes[c])) * frob;
    classes.push_back(e);
  }
  if (chars.values.empty() || chars.values.front() != h) failures.push_back("identity character differs from h");
  out["classes"] = classes;
  average *= Rational(1, static_cast<long>(order));

  Json inv;
  inv["average"] = to_json(average);
  if (invariant_poincare_avg(a) != average) failures.push_back("class average differs from element average");
  if (tab) {
    QPoly sum;
    for (std::size_t e = 0; e < order; ++e) sum += oracle_character(*tab, e);
    sum *= Rational(1, static_cast<long>(order));
    inv["oracle"] = to_json(sum);
    if (sum != average) failures.push_back("oracle invariant Poincaré polynomial differs");
    const bool socle = socle_check(*tab);
    const VolumeCheck vol = volume_element_check(f, *tab);
    out["socle"] = socle;
    out["volume_element"] = vol.ok;
    if (!socle) failures.push_back("socle check failed");
    if (!vol.ok) failures.push_back("volume element check failed");
  }
  out["proper"] = is_proper(a);
  if (g.roots) {
    const RootSystem& rs = *g.roots;
    const QPoly orbit = invariant_poincare_orbit(a, rs);
    const QPoly closed = invariant_poincare_closed(a, rs);
    const HybridFan fast = build_hybrid_fast(f, rs);
    const bool agree = same_hybrid(fast, build_hybrid_naive(f, rs));
    const QPoly hybrid_h = h_polynomial(fast.fan);
    inv["orbit"] = to_json(orbit);
    inv["closed_form"] = to_json(closed);
    inv["hybrid_h"] = to_json(hybrid_h);
    inv["builders_agree"] = agree;
    if (orbit != average || closed != average || hybrid_h != average) {
      failures.push_back("invariant Poincaré routes disagree");
    }
    if (!agree) failures.push_back("hybrid builders disagree");
  }
  out["invariant_poincare"] = inv;
  out["failures"] = failures;
  out["ok"] = failures.empty();
  return out;
}

Json run_example(const CorpusEntry& e) {
  const Fan f = corpus_fan(e.fan);
  const RootSystem rs = corpus_root_system(e.group);
  std::vector<std::string> failures;
  Json out;
  out["name"] = e.name;
  out["fan"] = e.fan;
  out["group"] = e.group;
  out["basis"] = to_string(e.basis);

  const HybridFan h = build_hybrid_naive(f, rs);
  const auto hf = f_vector(h.fan);
  out["hybrid_f_vector"] = hf;
  if (e.hybrid_f && *e.hybrid_f != hf) failures.push_back("hybrid f-vector differs from the stored value");
  const StructureReport s = check_structure(h);
  out["hybrid_valid"] = s.valid;
  out["hybrid_complete"] = s.complete;
  out["hybrid_simplicial"] = s.simplicial;
  if (!s.valid) failures.push_back("hybrid fan is invalid: " + s.detail);

  if (is_simplicial(f)) {
    const QPoly hp = h_polynomial(f);
    out["h"] = to_json(hp);
    if (e.h && *e.h != hp) failures.push_back("h-polynomial differs from the stored value");
    const TheoremReport r = theorem_check(f, rs, false);
    out["invariant_poincare"] = to_json(r.hybrid_h);
    if (e.invariant && *e.invariant != r.hybrid_h) {
      failures.push_back("invariant Poincaré polynomial differs from the stored value");
    }
  } else {
    out["hybrid_h"] = to_json(h_polynomial(h.fan));
  }
  out["failures"] = failures;
  out["ok"] = failures.empty();
  return out;
}

unsigned worker_count() {
  if (const char* env = std::getenv("FANCHAR_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

bool scalar_array(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, std::size_t indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || (v.is_array() && scalar_array(v))) {
        os << pad << k << ": ";
        render(v, 0, os);
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    if (scalar_array(j)) {
      os << pad;
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << scalar(j[i]);
      os << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "- [" << i << "]\n";
      render(j[i], indent + 2, os);
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace fanchar
