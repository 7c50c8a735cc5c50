#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "minrank/folding.hpp"
#include "minrank/orbits.hpp"
#include "minrank/polynomial.hpp"
#include "minrank/root_system.hpp"

namespace minrank {

/// {type, rank, cartan, vertices}
nlohmann::json to_json(const DynkinDiagram& d);
nlohmann::json to_json(const Polynomial& p);
/// {name, family, g, sigma, h, black}; sigma and black use vertex names.
nlohmann::json to_json(const MinimalRankPair& pair);
/// Array of pair records.
nlohmann::json to_json(const ClassificationResult& result);
/// {pair, orbits, passed, checks, P_G, P_H, Q}
nlohmann::json to_json(const PairReport& report);

/// {pair, vertices: [{id, dim, word}], edges: [[lo, hi, label]], dG, dH, Q}
nlohmann::json graph_to_json(const OrbitGraph& graph);
/// Vertices "c<id>/d<dim>", edges labeled by simple-root name.
std::string graph_to_dot(const OrbitGraph& graph);
/// {pair, P_G, P_H, Q, identity_holds}
nlohmann::json poincare_to_json(const PairReport& report);

/// Diagram from a type label ("A3", "C2+A1") or an object {cartan, vertices?}.
DynkinDiagram diagram_from_json(const nlohmann::json& j);
/// {"g": <diagram>, "sigma": [[i, j], ...]} with 0-based indices or vertex names.
std::pair<DynkinDiagram, FoldingInvolution> pair_spec_from_json(const nlohmann::json& j);

}  // namespace minrank
