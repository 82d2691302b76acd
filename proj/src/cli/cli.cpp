#include "fanchar/cli/cli.hpp"

#include <atomic>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "fanchar/charformula/charformula.hpp"
#include "fanchar/error.hpp"
#include "fanchar/srring/srring.hpp"
#include "fanchar/symmetry/action.hpp"

namespace fanchar {

namespace {

struct Options {
  std::string format = "json";
  std::string fan, group, polytope, out_file, route = "all", builder = "naive", example;
  long klass = -1;
  bool all = false;
  bool oracle = false;
};

const RootSystem& need_roots(const LoadedGroup& g, const char* what) {
  if (!g.roots) throw InputError(std::string(what) + " needs a group given by simple roots");
  return *g.roots;
}

Json cmd_validate(const Options& o, std::ostream& err) {
  const Fan f = resolve_fan(o.fan);
  const ValidationReport v = validate_fan(f);
  Json out;
  out["valid"] = v.ok();
  Json msgs = Json::array();
  for (const auto& x : v.violations) msgs.push_back(x.message);
  out["violations"] = msgs;
  out["simplicial"] = is_simplicial(f);
  const CompletenessReport c = check_completeness(f);
  out["complete"] = c.complete;
  if (!c.complete) out["incompleteness_witness"] = c.witness;
  err << (v.ok() ? "valid fan" : "invalid fan: " + v.summary()) << "\n";
  if (!v.ok()) throw InputError("fan failed validation");
  return out;
}

Json cmd_fvector(const Options& o, std::ostream& err) {
  const auto fv = f_vector(resolve_fan(o.fan));
  err << "f-vector:";
  for (auto x : fv) err << " " << x;
  err << "\n";
  return Json{{"f", fv}};
}

Json cmd_hpoly(const Options& o, std::ostream& err) {
  const QPoly h = h_polynomial(resolve_fan(o.fan), &err);
  err << "h-polynomial: " << h << "\n";
  return Json{{"h", to_json(h)}};
}

Json cmd_echar(const Options& o, std::ostream& err) {
  const Fan f = resolve_fan(o.fan);
  const LoadedGroup g = resolve_group(o.group, &f.space());
  const FanAction a = bind_action(g.group, f);
  const GradedCharacter c = equivariant_h_series(a);
  Json out = to_json(c, g.group);
  if (o.klass >= 0) {
    const auto k = static_cast<std::size_t>(o.klass);
    if (k >= c.values.size()) throw InputError("class index out of range");
    out = out["classes"][k];
    out["class"] = k;
    err << "class " << k << ": " << c.values[k] << "\n";
  } else {
    err << c.values.size() << " conjugacy classes\n";
  }
  return out;
}

Json cmd_invariants(const Options& o, std::ostream& err) {
  const Fan f = resolve_fan(o.fan);
  const LoadedGroup g = resolve_group(o.group, &f.space());
  const FanAction a = bind_action(g.group, f);
  const bool all = o.route == "all";
  Json out;
  std::optional<QPoly> first;
  bool agree = true;
  auto record = [&](const char* key, const QPoly& p) {
    out[key] = to_json(p);
    err << key << ": " << p << "\n";
    if (first && *first != p) agree = false;
    if (!first) first = p;
  };
  if (all || o.route == "avg") record("average", invariant_poincare_avg(a));
  if (all || o.route == "orbit") record("orbit", invariant_poincare_orbit(a, need_roots(g, "orbit route")));
  if (all || o.route == "closed") {
    record("closed_form", invariant_poincare_closed(a, need_roots(g, "closed-form route")));
  }
  if (all || o.route == "oracle") {
    const ArtinianTable tab = artinian_table(a);
    QPoly sum;
    for (std::size_t e = 0; e < g.group.order(); ++e) sum += oracle_character(tab, e);
    record("oracle", Rational(1, static_cast<long>(g.group.order())) * sum);
  }
  if (!agree) throw TheoremViolation("invariant Poincaré routes disagree: " + out.dump());
  return out;
}

Json cmd_hybrid(const Options& o, std::ostream& err) {
  const Fan f = resolve_fan(o.fan);
  const LoadedGroup g = resolve_group(o.group, &f.space());
  const RootSystem& rs = need_roots(g, "hybrid");
  std::optional<HybridFan> naive, fast;
  if (o.builder != "fast") naive = build_hybrid_naive(f, rs);
  if (o.builder != "naive") fast = build_hybrid_fast(f, rs);
  if (naive && fast && !same_hybrid(*naive, *fast)) throw TheoremViolation("hybrid builders disagree");
  const HybridFan& h = naive ? *naive : *fast;
  const StructureReport s = check_structure(h);
  err << "hybrid fan: " << h.fan.num_rays() << " rays, " << h.fan.maximal_cones().size() << " maximal cones"
      << (s.complete ? ", complete" : "") << (s.simplicial ? ", simplicial" : "") << "\n";
  if (!s.valid) throw TheoremViolation("hybrid fan is not a fan: " + s.detail);
  Json j = to_json(h);
  if (o.out_file.empty()) return j;
  write_json_file(o.out_file, j);
  Json out;
  out["written"] = o.out_file;
  out["rays"] = h.fan.num_rays();
  out["f_vector"] = f_vector(h.fan);
  out["complete"] = s.complete;
  out["simplicial"] = s.simplicial;
  if (s.simplicial) out["h"] = to_json(h_polynomial(h.fan));
  return out;
}

Json cmd_quotient(const Options& o, std::ostream& err) {
  const Polytope p = resolve_polytope(o.polytope);
  const LoadedGroup g = resolve_group(o.group, &p.space);
  const RootSystem& rs = need_roots(g, "quotient-polytope");
  const Polytope q = quotient_polytope(p, rs);
  const bool ok = polytopal_check(p, rs);
  err << "quotient polytope: " << q.vertices.size() << " vertices; normal fan matches hybrid fan: "
      << (ok ? "yes" : "no") << "\n";
  if (!ok) throw TheoremViolation("normal fan of the quotient polytope differs from the hybrid fan");
  Json out;
  out["quotient"] = to_json(q);
  out["polytopal_check"] = ok;
  return out;
}

template <typename Job>
Json run_parallel(std::size_t n, Job job) {
  std::vector<Json> results(n);
  std::atomic<std::size_t> next{0};
  std::mutex m;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      Json r = job(i);
      std::lock_guard lock(m);
      results[i] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  const unsigned threads = std::min<std::size_t>(worker_count(), n);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  Json out = Json::array();
  for (auto& r : results) out.push_back(std::move(r));
  return out;
}

// Theorem violations inside one instance are reported rather than rethrown.
template <typename F>
Json guarded_instance(Json head, F&& f) {
  try {
    Json r = f();
    for (auto& [k, v] : r.items()) head[k] = v;
  } catch (const TheoremViolation& e) {
    head["ok"] = false;
    head["failures"] = Json::array({e.what()});
  }
  return head;
}

Json summarize(Json runs, std::ostream& err) {
  std::size_t bad = 0;
  for (const auto& r : runs) {
    const bool ok = r.at("ok").get<bool>();
    if (!ok) ++bad;
    err << (ok ? "ok   " : "FAIL ") << r.value("name", r.value("fan", "") + " / " + r.value("group", "")) << "\n";
  }
  Json out;
  out["runs"] = std::move(runs);
  out["ok"] = bad == 0;
  if (bad) throw TheoremViolation(std::to_string(bad) + " instance(s) failed\n" + out.dump(2));
  return out;
}

Json cmd_verify(const Options& o, std::ostream& err) {
  if (o.all) {
    const auto inst = reflection_instances();
    return summarize(run_parallel(inst.size(),
                                  [&](std::size_t i) {
                                    Json head;
                                    head["fan"] = inst[i].fan;
                                    head["group"] = inst[i].group;
                                    return guarded_instance(head, [&] {
                                      const Fan f = corpus_fan(inst[i].fan);
                                      return verify_report(f, resolve_group(inst[i].group, &f.space()), o.oracle);
                                    });
                                  }),
                     err);
  }
  if (o.fan.empty() || o.group.empty()) throw InputError("verify needs <fan> <group> or --all");
  const Fan f = resolve_fan(o.fan);
  Json r = verify_report(f, resolve_group(o.group, &f.space()), o.oracle);
  err << "invariant Poincaré coefficients: " << render_text(r["invariant_poincare"]["average"]);
  if (!r["ok"].get<bool>()) throw TheoremViolation("verification failed\n" + r.dump(2));
  err << "all routes agree\n";
  return r;
}

Json cmd_examples(const Options& o, std::ostream& err) {
  const auto& entries = corpus_entries();
  if (o.all) {
    return summarize(run_parallel(entries.size(),
                                  [&](std::size_t i) {
                                    Json head;
                                    head["name"] = entries[i].name;
                                    return guarded_instance(head, [&] { return run_example(entries[i]); });
                                  }),
                     err);
  }
  if (o.example.empty()) {
    Json list = Json::array();
    for (const auto& e : entries) {
      list.push_back({{"name", e.name}, {"fan", e.fan}, {"group", e.group}, {"basis", to_string(e.basis)}});
      err << e.name << "\n";
    }
    return list;
  }
  const CorpusEntry* e = find_entry(o.example);
  if (!e) throw InputError("no corpus example named " + o.example);
  Json r = run_example(*e);
  if (!r["ok"].get<bool>()) throw TheoremViolation("example " + e->name + " failed\n" + r.dump(2));
  err << e->name << ": matches stored values\n";
  return r;
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "text") {
    out << render_text(j);
  } else {
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on fans with finite group actions", "fanchar"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));

  auto* validate = app.add_subcommand("validate", "Check the fan axioms");
  validate->add_option("fan", o.fan)->required();
  auto* fvector = app.add_subcommand("fvector", "Number of cones per dimension");
  fvector->add_option("fan", o.fan)->required();
  auto* hpoly = app.add_subcommand("hpoly", "h-polynomial");
  hpoly->add_option("fan", o.fan)->required();

  auto* echar = app.add_subcommand("echar", "Equivariant h-series per conjugacy class");
  echar->add_option("fan", o.fan)->required();
  echar->add_option("group", o.group)->required();
  auto* klass = echar->add_option("--class", o.klass, "Conjugacy class index");
  echar->add_flag("--all", o.all, "All classes (default)")->excludes(klass);

  auto* invariants = app.add_subcommand("invariants", "Invariant Poincaré polynomial");
  invariants->add_option("fan", o.fan)->required();
  invariants->add_option("group", o.group)->required();
  invariants->add_option("--route", o.route)->check(CLI::IsMember({"avg", "orbit", "closed", "oracle", "all"}));

  auto* hybrid = app.add_subcommand("hybrid", "Hybrid fan of a reflection action");
  hybrid->add_option("fan", o.fan)->required();
  hybrid->add_option("group", o.group)->required();
  hybrid->add_option("--out", o.out_file, "Write the hybrid fan here");
  hybrid->add_option("--builder", o.builder)->check(CLI::IsMember({"naive", "fast", "both"}));

  auto* quotient = app.add_subcommand("quotient-polytope", "Quotient polytope and its normal fan check");
  quotient->add_option("polytope", o.polytope)->required();
  quotient->add_option("group", o.group)->required();

  auto* verify = app.add_subcommand("verify", "Character and invariant suite");
  verify->add_option("fan", o.fan);
  verify->add_option("group", o.group);
  verify->add_flag("--oracle", o.oracle, "Include the Artinian ring computation");
  verify->add_flag("--all", o.all, "Run every corpus reflection instance");

  auto* examples = app.add_subcommand("examples", "List or run corpus examples");
  examples->add_option("name", o.example);
  examples->add_flag("--all", o.all, "Run every example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  auto fail = [&](const char* kind, const std::string& what, int code) {
    err << "error: " << what << "\n";
    emit(Json{{"error", kind}, {"message", what}}, o.format, out);
    return code;
  };
  try {
    Json r;
    if (*validate) r = cmd_validate(o, err);
    else if (*fvector) r = cmd_fvector(o, err);
    else if (*hpoly) r = cmd_hpoly(o, err);
    else if (*echar) r = cmd_echar(o, err);
    else if (*invariants) r = cmd_invariants(o, err);
    else if (*hybrid) r = cmd_hybrid(o, err);
    else if (*quotient) r = cmd_quotient(o, err);
    else if (*verify) r = cmd_verify(o, err);
    else r = cmd_examples(o, err);
    emit(r, o.format, out);
    return kExitOk;
  } catch (const InputError& e) {
    return fail("input", e.what(), kExitInput);
  } catch (const TheoremViolation& e) {
    return fail("theorem-violation", e.what(), kExitTheorem);
  } catch (const InternalError& e) {
    return fail("internal", e.what(), kExitInternal);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kExitInternal);
  }
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace fanchar
