#include "fanchar/corpus/corpus.hpp"

#include <sstream>

#include "fanchar/error.hpp"

namespace fanchar {

std::vector<std::string> corpus_fan_names() {
  return {"line",       "quadrant",   "octant3",    "cross4",           "coxeter-A2",
          "coxeter-A3", "coxeter-B2", "coxeter-B3", "octahedron-normal"};
}

Fan corpus_fan(const std::string& name) {
  if (name == "line") return cross_polytope_fan(1);
  if (name == "quadrant") return cross_polytope_fan(2);
  if (name == "octant3") return cross_polytope_fan(3);
  if (name == "cross4") return cross_polytope_fan(4);
  if (name == "octahedron-normal") return normal_fan(cross_polytope(3));
  if (name.rfind("coxeter-", 0) == 0) return coxeter_fan(corpus_root_system(name.substr(8)));
  throw InputError("unknown corpus fan " + name);
}

std::vector<std::string> corpus_polytope_names() { return {"octahedron", "cube", "square", "hexagon"}; }

Polytope corpus_polytope(const std::string& name) {
  if (name == "octahedron") return cross_polytope(3);
  if (name == "cube") return cube(3);
  if (name == "square") return cube(2);
  if (name == "hexagon") {
    // The roots of A2 in simple-root coordinates.
    std::vector<QVector> pts{make_vector({1, 0}), make_vector({-1, 0}), make_vector({0, 1}),
                             make_vector({0, -1}), make_vector({1, 1}), make_vector({-1, -1})};
    return make_polytope(type_a(2).space, std::move(pts));
  }
  throw InputError("unknown corpus polytope " + name);
}

namespace {

RootSystem base_system(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B')) {
    const std::size_t n = std::stoul(name.substr(1));
    if (n == 0 || n > 6) throw InputError("unsupported rank in " + name);
    return name[0] == 'A' ? type_a(n) : type_b(n);
  }
  if (name.rfind("sign", 0) == 0) return sign_system(std::stoul(name.substr(4)));
  if (name.rfind("trivial", 0) == 0) {
    return root_system({}, AmbientSpace::euclidean(std::stoul(name.substr(7))));
  }
  throw InputError("unknown root system " + name);
}

}  // namespace

RootSystem corpus_root_system(const std::string& name) {
  const auto open = name.find('[');
  try {
    if (open == std::string::npos) return base_system(name);
    const RootSystem full = base_system(name.substr(0, open));
    const auto close = name.find(']', open);
    if (close == std::string::npos) throw InputError("unterminated parabolic in " + name);
    std::vector<std::size_t> j;
    std::stringstream ss(name.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      j.push_back(std::stoul(item));
      if (j.back() >= full.rank()) throw InputError("simple root index out of range in " + name);
    }
    return parabolic_root_system(full, j);
  } catch (const std::logic_error&) {
    throw InputError("cannot parse root system name " + name);
  }
}

std::vector<std::string> parabolic_names(const std::string& name) {
  const std::size_t r = base_system(name).rank();
  std::vector<std::string> out;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << r); ++mask) {
    std::string s = name + "[";
    bool first = true;
    for (std::size_t j = 0; j < r; ++j) {
      if (!(mask >> j & 1)) continue;
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
    }
    out.push_back(s + "]");
  }
  out.push_back(name);
  return out;
}

const char* to_string(Basis b) {
  switch (b) {
    case Basis::kHand: return "hand";
    case Basis::kOracle: return "oracle";
    case Basis::kWorkedExample: return "worked-example";
  }
  return "";
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = [] {
    using V = std::vector<std::size_t>;
    std::vector<CorpusEntry> e;
    e.push_back({"line", "line", "trivial1", QPoly{1, 1}, QPoly{1, 1}, V{1, 2}, Basis::kHand});
    e.push_back({"quadrant-b2", "quadrant", "B2", QPoly{1, 2, 1}, QPoly{1, 1, 1}, V{1, 3, 3}, Basis::kHand});
    e.push_back({"quadrant-sign", "quadrant", "sign2", QPoly{1, 2, 1}, QPoly{1, 2, 1}, V{1, 4, 4}, Basis::kOracle});
    e.push_back({"octant-sign", "octant3", "sign3", QPoly{1, 3, 3, 1}, QPoly{1, 3, 3, 1}, V{1, 6, 12, 8},
                 Basis::kOracle});
    e.push_back({"octant-b3", "octant3", "B3", QPoly{1, 3, 3, 1}, QPoly{1, 1, 1, 1}, V{1, 4, 6, 4}, Basis::kOracle});
    e.push_back({"cross4-b4", "cross4", "B4", QPoly{1, 4, 6, 4, 1}, QPoly{1, 1, 1, 1, 1}, V{1, 5, 10, 10, 5},
                 Basis::kOracle});
    e.push_back({"coxeter-a2", "coxeter-A2", "A2", QPoly{1, 4, 1}, QPoly{1, 2, 1}, V{1, 4, 4}, Basis::kOracle});
    e.push_back({"coxeter-a2-parabolic", "coxeter-A2", "A2[0]", QPoly{1, 4, 1}, QPoly{1, 3, 1}, V{1, 5, 5},
                 Basis::kOracle});
    e.push_back({"coxeter-a3", "coxeter-A3", "A3", QPoly{1, 11, 11, 1}, QPoly{1, 3, 3, 1}, V{1, 6, 12, 8},
                 Basis::kOracle});
    e.push_back({"coxeter-b2", "coxeter-B2", "B2", QPoly{1, 6, 1}, QPoly{1, 2, 1}, V{1, 4, 4}, Basis::kOracle});
    e.push_back({"coxeter-b3", "coxeter-B3", "B3", QPoly{1, 23, 23, 1}, QPoly{1, 3, 3, 1}, V{1, 6, 12, 8},
                 Basis::kOracle});
    e.push_back({"octahedron-sign", "octahedron-normal", "sign3", std::nullopt, std::nullopt, V{1, 4, 6, 4},
                 Basis::kWorkedExample});
    return e;
  }();
  return entries;
}

const CorpusEntry* find_entry(const std::string& name) {
  for (const auto& e : corpus_entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<Instance> reflection_instances() {
  const std::vector<std::pair<std::string, std::string>> base{
      {"quadrant", "B2"},     {"octant3", "B3"},      {"cross4", "B4"},       {"coxeter-A2", "A2"},
      {"coxeter-A3", "A3"},   {"coxeter-B2", "B2"},   {"coxeter-B3", "B3"}};
  std::vector<Instance> out;
  for (const auto& [fan, group] : base) {
    for (const auto& g : parabolic_names(group)) out.push_back({fan, g});
  }
  out.push_back({"quadrant", "sign2"});
  out.push_back({"octant3", "sign3"});
  return out;
}

}  // namespace fanchar
