#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fanchar/charformula/charformula.hpp"
#include "fanchar/fan/fan.hpp"
#include "fanchar/fan/polytope.hpp"
#include "fanchar/hybrid/hybrid.hpp"
#include "fanchar/symmetry/group.hpp"
#include "fanchar/symmetry/root_system.hpp"

namespace fanchar {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
QVector vector_from_json(const Json& j);
Json to_json(const QVector& v);
QMatrix matrix_from_json(const Json& j);
Json to_json(const QMatrix& m);
/// Ascending coefficient strings.
Json to_json(const QPoly& p);

/// {"dim", "gram", "rays", "maximal_cones"}; faces are rebuilt on load.
Fan fan_from_json(const Json& j);
Json to_json(const Fan& f);

/// {"dim", "vertices"}; optional "gram".
Polytope polytope_from_json(const Json& j);
Json to_json(const Polytope& p);

/// A group file holds either "generators" or "simple_roots"; "gram" is
/// optional and defaults to `fallback` (or the standard form).
struct LoadedGroup {
  MatrixGroup group;
  std::optional<RootSystem> roots;
};

LoadedGroup group_from_json(const Json& j, const AmbientSpace* fallback = nullptr);
Json to_json(const RootSystem& rs);
Json group_to_json(const MatrixGroup& g);

/// {"classes": [{"size", "representative", "value"}]}.
Json to_json(const GradedCharacter& c, const MatrixGroup& g);

/// Fan format plus per-ray "labels" and per-maximal-cone "cells".
Json to_json(const HybridFan& h);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace fanchar
