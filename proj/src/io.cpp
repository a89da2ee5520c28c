#include "artin/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "artin/errors.hpp"

namespace artin {

using nlohmann::json;

DefiningGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "graph JSON must be an object");
  DefiningGraph g;
  try {
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    if (j.contains("edges")) {
      std::size_t i = 0;
      for (const auto& e : j.at("edges")) {
        const auto u = e.at("u").get<std::string>();
        const auto v = e.at("v").get<std::string>();
        for (const auto& end : {u, v})
          if (!g.index_of(end))
            throw ParseError(0, "edge " + std::to_string(i) + " references undeclared vertex '" + end + "'");
        g.add_edge(u, v, e.at("m").get<int>());
        ++i;
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return g;
}

json graph_to_json(const DefiningGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"m", e.label}});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

DefiningGraph parse_graph_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_graph(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DefiningGraph load_graph_file(const std::string& path) {
  try {
    return parse_graph_any(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_dot(const DefiningGraph& g) {
  std::ostringstream out;
  out << "graph defining {\n";
  for (const auto& v : g.vertices()) out << "  " << quoted(v) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << quoted(g.name(e.u)) << " -- " << quoted(g.name(e.v)) << " [label=" << e.label;
    if (e.label >= 3) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

DiscDiagram diagram_from_json(const json& j) {
  DiscDiagram d;
  try {
    std::unordered_map<std::string, int> index;
    for (const auto& v : j.at("vertices")) {
      DiagramVertex dv;
      dv.id = v.at("id").get<std::string>();
      dv.type = v.at("type").get<int>();
      if (v.contains("label") && !v.at("label").is_null()) dv.label = v.at("label").get<int>();
      dv.boundary = v.value("boundary", false);
      if (!index.emplace(dv.id, static_cast<int>(d.vertices.size())).second)
        throw ParseError(0, "duplicate diagram vertex '" + dv.id + "'");
      d.vertices.push_back(std::move(dv));
    }
    for (const auto& f : j.at("faces")) {
      std::vector<Corner> face;
      for (const auto& c : f) {
        const auto id = c.at("v").get<std::string>();
        const auto it = index.find(id);
        if (it == index.end()) throw ParseError(0, "face corner references unknown vertex '" + id + "'");
        const auto den = c.value("q_den", std::int64_t{1});
        if (den == 0) throw ParseError(0, "zero angle denominator at vertex '" + id + "'");
        face.push_back({it->second, AngleQ(c.at("q_num").get<std::int64_t>(), den)});
      }
      d.faces.push_back(std::move(face));
    }
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed diagram JSON: ") + e.what());
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("invalid diagram: ") + e.what());
  }
  return d;
}

json diagram_to_json(const DiscDiagram& d) {
  json vs = json::array();
  for (const auto& v : d.vertices) {
    json o = {{"id", v.id}, {"type", v.type}, {"boundary", v.boundary}};
    if (v.label) o["label"] = *v.label;
    vs.push_back(std::move(o));
  }
  json fs = json::array();
  for (const auto& f : d.faces) {
    json face = json::array();
    for (const auto& c : f)
      face.push_back({{"v", d.vertices[c.vertex].id}, {"q_num", c.angle.numerator()}, {"q_den", c.angle.denominator()}});
    fs.push_back(std::move(face));
  }
  return {{"vertices", vs}, {"faces", fs}};
}

namespace {

const char* scope_name(Scope s) { return s == Scope::Proven ? "PROVEN" : "INFORMATIONAL"; }

json triangles_json(const DefiningGraph* g, const std::vector<Triangle>& ts) {
  json out = json::array();
  for (const auto& t : ts) {
    json o = {{"labels", t.labels}, {"angle_sum", to_string(t.angle_sum)}};
    if (g) o["vertices"] = {g->name(t.vertices[0]), g->name(t.vertices[1]), g->name(t.vertices[2])};
    else o["vertices"] = t.vertices;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

json report_to_json(const InvariantReport& r) {
  json fields = json::array();
  for (const auto& f : r.fields())
    fields.push_back({{"name", f.name}, {"value", f.value}, {"scope", scope_name(f.scope)}, {"basis", f.basis}});
  const auto& c = r.classes;
  json classes = {{"right_angled", c.right_angled},
                  {"large_type", c.large_type},
                  {"two_dimensional", c.two_dimensional},
                  {"euclidean_triangles", triangles_json(nullptr, c.euclidean_triangles)},
                  {"spherical_triangles", triangles_json(nullptr, c.spherical_triangles)},
                  {"full_2222_squares", json::array()},
                  {"has_leaf", c.has_leaf},
                  {"connected", c.connected}};
  if (c.hyperbolic_type) classes["hyperbolic_type"] = *c.hyperbolic_type;
  for (const auto& sq : c.full_2222_squares) classes["full_2222_squares"].push_back(sq.vertices);
  return {{"schema", kSchemaVersion},
          {"kind", "report"},
          {"source", r.source},
          {"hash", r.hash},
          {"classes", classes},
          {"fields", fields}};
}

json verdict_to_json(const ComparisonVerdict& v) {
  json out = {{"schema", kSchemaVersion}, {"kind", "verdict"}, {"verdict", v.kind_name()}};
  if (v.kind == ComparisonVerdict::Kind::Distinguished) {
    out["invariant"] = v.invariant;
    out["values"] = {v.first_value, v.second_value};
    out["citation"] = v.citation;
  }
  if (v.kind == ComparisonVerdict::Kind::GroupsIsomorphic) {
    out["isomorphism"] = v.isomorphism;
    out["citation"] = v.citation;
  }
  json agreeing = json::array();
  for (const auto& a : v.agreeing) agreeing.push_back({{"name", a.name}, {"value", a.value}});
  json skipped = json::array();
  for (const auto& s : v.skipped)
    skipped.push_back({{"name", s.name}, {"hypothesis", s.hypothesis}, {"detail", s.detail}});
  out["agreeing"] = agreeing;
  out["skipped"] = skipped;
  return out;
}

json ledger_to_json(const DiscDiagram& d, const CurvatureLedger& l) {
  json faces = json::array();
  for (const auto& k : l.face) faces.push_back(to_string(k));
  json vertices = json::object();
  for (std::size_t i = 0; i < d.vertices.size(); ++i) vertices[d.vertices[i].id] = to_string(l.vertex[i]);
  return {{"schema", kSchemaVersion},
          {"kind", "gauss_bonnet"},
          {"unit", "pi"},
          {"face_curvature", faces},
          {"vertex_curvature", vertices},
          {"face_total", to_string(l.face_total)},
          {"vertex_total", to_string(l.vertex_total)},
          {"residual", to_string(l.residual)}};
}

std::string ext_vertex_name(const Raag& host, const ExtVertex& v) {
  const auto& base = host.graph().name(v.base);
  if (v.conjugator.empty()) return base;
  return base + "^(" + host.format(v.conjugator) + ")";
}

std::string ball_to_dot(const Raag& host, const ExtBall& ball) {
  std::ostringstream out;
  out << "graph extension_ball {\n  // radius " << ball.radius << "\n";
  for (std::size_t i = 0; i < ball.size(); ++i)
    out << "  n" << i << " [label=" << quoted(ext_vertex_name(host, ball.vertices[i])) << "];\n";
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (int j : ball.adjacency[i])
      if (static_cast<int>(i) < j) out << "  n" << i << " -- n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace artin
