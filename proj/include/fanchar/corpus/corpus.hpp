#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanchar/exact/qpoly.hpp"
#include "fanchar/fan/fan.hpp"
#include "fanchar/fan/polytope.hpp"
#include "fanchar/symmetry/root_system.hpp"

namespace fanchar {

/// Named builders. Fans: line, quadrant, octant3, cross4, coxeter-A2,
/// coxeter-A3, coxeter-B2, coxeter-B3, octahedron-normal. Polytopes:
/// octahedron, cube, square, hexagon.
std::vector<std::string> corpus_fan_names();
Fan corpus_fan(const std::string& name);
std::vector<std::string> corpus_polytope_names();
Polytope corpus_polytope(const std::string& name);

/// Root systems: trivial<d>, sign<d>, A2, A3, B2, B3, B4, and parabolics
/// written as e.g. "B3[0,2]".
RootSystem corpus_root_system(const std::string& name);

/// All standard parabolics of a named system, the full one last.
std::vector<std::string> parabolic_names(const std::string& name);

/// How an expected value was obtained.
enum class Basis { kHand, kOracle, kWorkedExample };
const char* to_string(Basis b);

struct CorpusEntry {
  std::string name;
  std::string fan;
  std::string group;
  std::optional<QPoly> h;
  std::optional<QPoly> invariant;
  std::optional<std::vector<std::size_t>> hybrid_f;
  Basis basis = Basis::kHand;
};

const std::vector<CorpusEntry>& corpus_entries();
const CorpusEntry* find_entry(const std::string& name);

/// Pairs used for the theorem sweeps: every simplicial corpus fan with its
/// own full group and every standard parabolic, plus the sign groups on the
/// quadrant and octant fans.
struct Instance {
  std::string fan;
  std::string group;
};
std::vector<Instance> reflection_instances();

}  // namespace fanchar
