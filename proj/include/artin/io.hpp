#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "artin/curvature.hpp"
#include "artin/defining_graph.hpp"
#include "artin/invariants.hpp"
#include "artin/raag.hpp"
#include "artin/tree_cycles.hpp"

namespace artin {

inline constexpr int kSchemaVersion = 1;

// Graphs: {"vertices": [...], "edges": [{"u":..,"v":..,"m":..}]}.
// Edges naming a vertex missing from "vertices" are rejected.
DefiningGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const DefiningGraph& g);

/// Text or JSON, chosen by the first non-blank character.
DefiningGraph parse_graph_any(std::string_view text);
/// Throws std::runtime_error when the file cannot be read.
DefiningGraph load_graph_file(const std::string& path);
std::string read_file(const std::string& path);

std::string graph_to_dot(const DefiningGraph& g);

// {"vertices":[{id,type,label?,boundary}], "faces":[[{v,q_num,q_den}]]}
DiscDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const DiscDiagram& d);

nlohmann::json report_to_json(const InvariantReport& r);
nlohmann::json verdict_to_json(const ComparisonVerdict& v);
nlohmann::json ledger_to_json(const DiscDiagram& d, const CurvatureLedger& l);

std::string ball_to_dot(const Raag& host, const ExtBall& ball);
std::string ext_vertex_name(const Raag& host, const ExtVertex& v);

}  // namespace artin
