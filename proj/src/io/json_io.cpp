#include "fanchar/io/json_io.hpp"

#include <fstream>

#include "fanchar/error.hpp"

namespace fanchar {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

AmbientSpace space_from_json(const Json& j, std::size_t dim, const AmbientSpace* fallback) {
  if (j.contains("gram")) return AmbientSpace(dim, matrix_from_json(j.at("gram")));
  if (fallback && fallback->dim() == dim) return *fallback;
  return AmbientSpace::euclidean(dim);
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational string, got " + j.dump());
}

Json to_json(const Rational& r) { return r.str(); }

QVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a nested array, got " + j.dump());
  std::vector<QVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged matrix");
  }
  return QMatrix::from_rows(rows, cols);
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vector(r)));
  return out;
}

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& s : p.coefficient_strings()) out.push_back(s);
  return out;
}

Fan fan_from_json(const Json& j) {
  return guarded("fan", [&] {
    const auto dim = j.at("dim").get<std::size_t>();
    AmbientSpace space = space_from_json(j, dim, nullptr);
    std::vector<QVector> rays;
    for (const auto& r : j.at("rays")) {
      rays.push_back(vector_from_json(r));
      if (rays.back().size() != dim) throw DimensionError("ray has wrong dimension");
    }
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& c : j.at("maximal_cones")) cones.push_back(c.get<std::vector<std::size_t>>());
    return Fan::from_maximal_cones(std::move(space), std::move(rays), cones);
  });
}

Json to_json(const Fan& f) {
  Json out;
  out["dim"] = f.dim();
  out["gram"] = to_json(f.space().gram());
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(to_json(r));
  out["rays"] = rays;
  Json cones = Json::array();
  for (auto id : f.maximal_cones()) cones.push_back(f.cone(id).rays);
  out["maximal_cones"] = cones;
  return out;
}

Polytope polytope_from_json(const Json& j) {
  return guarded("polytope", [&] {
    const auto dim = j.at("dim").get<std::size_t>();
    AmbientSpace space = space_from_json(j, dim, nullptr);
    std::vector<QVector> pts;
    for (const auto& v : j.at("vertices")) {
      pts.push_back(vector_from_json(v));
      if (pts.back().size() != dim) throw DimensionError("vertex has wrong dimension");
    }
    return make_polytope(std::move(space), std::move(pts));
  });
}

Json to_json(const Polytope& p) {
  Json out;
  out["dim"] = p.space.dim();
  if (!(p.space == AmbientSpace::euclidean(p.space.dim()))) out["gram"] = to_json(p.space.gram());
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(to_json(v));
  out["vertices"] = verts;
  return out;
}

LoadedGroup group_from_json(const Json& j, const AmbientSpace* fallback) {
  return guarded("group", [&] {
    LoadedGroup out;
    if (j.contains("simple_roots")) {
      std::vector<QVector> roots;
      for (const auto& r : j.at("simple_roots")) roots.push_back(vector_from_json(r));
      std::size_t dim = roots.empty() ? 0 : roots.front().size();
      if (j.contains("dim")) dim = j.at("dim").get<std::size_t>();
      else if (roots.empty() && fallback) dim = fallback->dim();
      out.roots = root_system(std::move(roots), space_from_json(j, dim, fallback));
      out.group = out.roots->group;
      return out;
    }
    if (!j.contains("generators")) throw InputError("group file needs \"generators\" or \"simple_roots\"");
    std::vector<QMatrix> gens;
    for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(g));
    std::size_t dim = gens.empty() ? 0 : gens.front().rows();
    if (j.contains("dim")) dim = j.at("dim").get<std::size_t>();
    else if (gens.empty() && fallback) dim = fallback->dim();
    out.group = MatrixGroup::generate(space_from_json(j, dim, fallback), gens);
    return out;
  });
}

Json to_json(const RootSystem& rs) {
  Json out;
  out["dim"] = rs.space.dim();
  out["gram"] = to_json(rs.space.gram());
  Json roots = Json::array();
  for (const auto& r : rs.simple_roots) roots.push_back(to_json(r));
  out["simple_roots"] = roots;
  return out;
}

Json group_to_json(const MatrixGroup& g) {
  Json out;
  out["dim"] = g.dim();
  out["gram"] = to_json(g.space().gram());
  Json gens = Json::array();
  for (const auto& m : g.generators()) gens.push_back(to_json(m));
  out["generators"] = gens;
  return out;
}

Json to_json(const GradedCharacter& c, const MatrixGroup& g) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    Json e;
    e["size"] = c.class_sizes[i];
    e["representative"] = to_json(g.element(c.representatives[i]));
    e["value"] = to_json(c.values[i]);
    classes.push_back(e);
  }
  Json out;
  out["classes"] = classes;
  return out;
}

Json to_json(const HybridFan& h) {
  Json out = to_json(h.fan);
  Json labels = Json::array();
  for (const auto& l : h.labels) {
    Json e;
    if (l.kind == HybridRay::Kind::kRho) {
      e["kind"] = "rho";
      e["source_ray"] = l.source;
    } else {
      e["kind"] = "tau";
      e["simple_root"] = l.source;
    }
    labels.push_back(e);
  }
  out["labels"] = labels;
  Json cells = Json::array();
  for (auto id : h.fan.maximal_cones()) {
    const auto& p = h.provenance[id];
    Json e;
    e["rays"] = h.fan.cone(id).rays;
    e["I"] = p.i;
    e["J"] = p.j;
    e["source_cone"] = h.source.cone(p.source_cone).rays;
    cells.push_back(e);
  }
  out["cells"] = cells;
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace fanchar
