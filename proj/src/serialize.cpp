#include "minrank/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "minrank/errors.hpp"

namespace minrank {

using nlohmann::json;

json to_json(const DynkinDiagram& d) {
  return {{"type", d.type_label()}, {"rank", d.rank()}, {"cartan", d.cartan()}, {"vertices", d.vertices()}};
}

json to_json(const Polynomial& p) { return p.coeffs(); }

json to_json(const MinimalRankPair& pair) {
  const auto& names = pair.g().vertices();
  json sigma = json::array();
  for (auto [i, j] : pair.sigma().two_cycles()) sigma.push_back({names[i], names[j]});
  json black = json::array();
  for (int k : pair.h().black_vertices()) black.push_back(pair.h().diagram.vertices()[k]);
  return {{"name", pair.name()}, {"family", pair.family()}, {"g", to_json(pair.g())},
          {"sigma", sigma},      {"h", to_json(pair.h().diagram)}, {"black", black}};
}

json to_json(const ClassificationResult& result) {
  json out = json::array();
  for (const auto& p : result.pairs) out.push_back(to_json(p));
  return out;
}

json to_json(const PairReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"pair", report.pair_name}, {"orbits", report.orbit_count}, {"passed", report.passed()},
          {"checks", checks},         {"P_G", to_json(report.p_g)},    {"P_H", to_json(report.p_h)},
          {"Q", to_json(report.q)}};
}

json graph_to_json(const OrbitGraph& graph) {
  const auto& names = graph.pair().g().vertices();
  json vertices = json::array();
  for (const auto& v : graph.vertices()) {
    json word = json::array();
    for (int s : v.rep_word) word.push_back(names[s]);
    vertices.push_back({{"id", v.coset_id}, {"dim", v.dim}, {"word", word}});
  }
  json edges = json::array();
  for (const auto& e : graph.edges()) edges.push_back({e.lo, e.hi, names[e.label]});
  return {{"pair", graph.pair().name()}, {"vertices", vertices}, {"edges", edges},
          {"dG", graph.d_g()},           {"dH", graph.d_h()},    {"Q", to_json(orbit_poincare(graph))}};
}

std::string graph_to_dot(const OrbitGraph& graph) {
  const auto& names = graph.pair().g().vertices();
  std::ostringstream os;
  os << "digraph \"" << graph.pair().name() << "\" {\n";
  os << "  rankdir=BT;\n";
  for (const auto& v : graph.vertices()) {
    os << "  c" << v.coset_id << " [label=\"c" << v.coset_id << "/d" << v.dim << "\"];\n";
  }
  for (const auto& e : graph.edges()) {
    os << "  c" << e.lo << " -> c" << e.hi << " [label=\"" << names[e.label] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json poincare_to_json(const PairReport& report) {
  return {{"pair", report.pair_name},
          {"P_G", to_json(report.p_g)},
          {"P_H", to_json(report.p_h)},
          {"Q", to_json(report.q)},
          {"identity_holds", report.q * report.p_h == report.p_g}};
}

DynkinDiagram diagram_from_json(const json& j) {
  if (j.is_string()) return diagram_from_label(j.get<std::string>());
  if (!j.is_object() || !j.contains("cartan")) throw InvalidInput("diagram must be a type label or {cartan, vertices}");
  try {
    auto cartan = j.at("cartan").get<CartanMatrix>();
    std::vector<std::string> vertices;
    if (j.contains("vertices")) vertices = j.at("vertices").get<std::vector<std::string>>();
    return DynkinDiagram(std::move(cartan), std::move(vertices));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed diagram: ") + e.what());
  }
}

std::pair<DynkinDiagram, FoldingInvolution> pair_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("g")) throw InvalidInput("pair spec needs a \"g\" entry");
  auto g = diagram_from_json(j.at("g"));
  auto vertex = [&](const json& v) {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
      const auto& names = g.vertices();
      auto it = std::find(names.begin(), names.end(), v.get<std::string>());
      if (it != names.end()) return static_cast<int>(it - names.begin());
    }
    throw InvalidInput("unknown vertex in sigma: " + v.dump());
  };
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("sigma")) {
    const auto& s = j.at("sigma");
    if (!s.is_array()) throw InvalidInput("sigma must be a list of vertex pairs");
    for (const auto& p : s) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("sigma entries must be vertex pairs");
      pairs.emplace_back(vertex(p[0]), vertex(p[1]));
    }
  }
  auto sigma = FoldingInvolution::from_pairs(g.rank(), pairs);
  return {std::move(g), std::move(sigma)};
}

}  // namespace minrank
