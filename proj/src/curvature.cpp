#include "artin/curvature.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "artin/errors.hpp"

namespace artin {

MoussongAngles moussong_corner_angles(int m) {
  if (m < 2) throw std::invalid_argument("edge label must be >= 2");
  return {AngleQ(m - 1, 2 * m), AngleQ(1, 2), AngleQ(1, 2 * m)};
}

void DiscDiagram::validate() const {
  const int nv = static_cast<int>(vertices.size());
  std::set<std::string> ids;
  for (const auto& v : vertices) {
    if (!ids.insert(v.id).second) throw std::invalid_argument("duplicate vertex id '" + v.id + "'");
    if (v.type < 0 || v.type > 2) throw std::invalid_argument("vertex '" + v.id + "' has type outside {0,1,2}");
    if ((v.type == 2) != v.label.has_value())
      throw std::invalid_argument("vertex '" + v.id + "': label must be present iff type is 2");
    if (v.label && *v.label < 2) throw std::invalid_argument("vertex '" + v.id + "': label < 2");
  }
  if (faces.empty()) throw std::invalid_argument("diagram has no faces");

  std::map<std::pair<int, int>, int> edge_faces;
  std::vector<int> corners_at(nv, 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.size() < 3) throw std::invalid_argument("face " + std::to_string(f) + " has fewer than 3 corners");
    std::set<int> seen;
    for (const auto& c : face) {
      if (c.vertex < 0 || c.vertex >= nv)
        throw std::invalid_argument("face " + std::to_string(f) + " references a missing vertex");
      if (c.angle < 0 || c.angle > 2)
        throw std::invalid_argument("face " + std::to_string(f) + " has a corner angle outside [0, 2]");
      if (!seen.insert(c.vertex).second)
        throw std::invalid_argument("face " + std::to_string(f) + " visits a vertex twice");
      ++corners_at[c.vertex];
    }
    for (std::size_t i = 0; i < face.size(); ++i) {
      int a = face[i].vertex, b = face[(i + 1) % face.size()].vertex;
      if (a > b) std::swap(a, b);
      if (++edge_faces[{a, b}] > 2)
        throw std::invalid_argument("an edge lies on more than two faces");
    }
  }
  for (int v = 0; v < nv; ++v)
    if (corners_at[v] == 0) throw std::invalid_argument("vertex '" + vertices[v].id + "' lies on no face");

  const long euler = static_cast<long>(nv) - static_cast<long>(edge_faces.size()) + static_cast<long>(faces.size());
  if (euler != 1) throw std::invalid_argument("Euler characteristic " + std::to_string(euler) + " != 1");

  std::vector<std::vector<int>> bnd(nv);
  for (const auto& [e, count] : edge_faces)
    if (count == 1) {
      bnd[e.first].push_back(e.second);
      bnd[e.second].push_back(e.first);
    }
  int start = -1, on_boundary = 0;
  for (int v = 0; v < nv; ++v) {
    const bool declared = vertices[v].boundary;
    if (!bnd[v].empty() != declared)
      throw std::invalid_argument("vertex '" + vertices[v].id + "' boundary flag disagrees with the diagram");
    if (declared) {
      if (bnd[v].size() != 2)
        throw std::invalid_argument("boundary is not a single cycle at vertex '" + vertices[v].id + "'");
      ++on_boundary;
      if (start < 0) start = v;
    }
  }
  if (start < 0) throw std::invalid_argument("diagram has no boundary");
  int prev = -1, cur = start, walked = 0;
  do {
    const int next = bnd[cur][0] != prev ? bnd[cur][0] : bnd[cur][1];
    prev = cur;
    cur = next;
    ++walked;
  } while (cur != start && walked <= nv);
  if (walked != on_boundary) throw std::invalid_argument("boundary edges form more than one cycle");
}

AngleQ face_curvature(std::span<const Corner> face) {
  AngleQ k = 2 - static_cast<std::int64_t>(face.size());
  for (const auto& c : face) k += c.angle;
  return k;
}

AngleQ vertex_curvature(bool boundary, std::span<const AngleQ> corner_angles) {
  if (!boundary && corner_angles.empty()) throw std::invalid_argument("interior vertex with no corners");
  AngleQ k = boundary ? 1 : 2;
  for (const auto& a : corner_angles) k -= a;
  return k;
}

CurvatureLedger curvature_ledger(const DiscDiagram& d) {
  d.validate();
  CurvatureLedger l;
  std::vector<std::vector<AngleQ>> at(d.vertices.size());
  for (const auto& face : d.faces) {
    l.face.push_back(face_curvature(face));
    l.face_total += l.face.back();
    for (const auto& c : face) at[c.vertex].push_back(c.angle);
  }
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    l.vertex.push_back(vertex_curvature(d.vertices[v].boundary, at[v]));
    l.vertex_total += l.vertex.back();
  }
  l.residual = l.total() - 2;
  return l;
}

AngleQ gauss_bonnet_residual(const DiscDiagram& d) { return curvature_ledger(d).residual; }

CurvatureLedger redistribute(const CurvatureLedger& ledger, int face, std::span<const int> vertices,
                             AngleQ amount) {
  CurvatureLedger out = ledger;
  if (face < 0 || face >= static_cast<int>(out.face.size())) throw std::invalid_argument("face index out of range");
  for (int v : vertices) {
    if (v < 0 || v >= static_cast<int>(out.vertex.size())) throw std::invalid_argument("vertex index out of range");
    out.face[face] -= amount;
    out.face_total -= amount;
    out.vertex[v] += amount;
    out.vertex_total += amount;
  }
  return out;
}

DiscDiagram fundamental_disc(const DefiningGraph& g, const CycleSubgraph& cycle) {
  cycle.validate(g);
  DiscDiagram d;
  d.vertices.push_back({"<>", 0, std::nullopt, false});
  const int n = cycle.length();
  // type-1 vertex for each generator of the cycle, then type-2 vertex per edge
  for (int v : cycle.vertices) d.vertices.push_back({"<" + g.name(v) + ">", 1, std::nullopt, true});
  const auto labels = cycle.labels(g);
  for (int i = 0; i < n; ++i) {
    const auto& a = g.name(cycle.vertices[i]);
    const auto& b = g.name(cycle.vertices[(i + 1) % n]);
    d.vertices.push_back({"<" + a + "," + b + ">", 2, labels[i], true});
  }
  for (int i = 0; i < n; ++i) {
    const auto angles = moussong_corner_angles(labels[i]);
    const int ta = 1 + i, tb = 1 + (i + 1) % n, edge = 1 + n + i;
    d.faces.push_back({{0, angles.type0}, {ta, angles.type1}, {edge, angles.type2}});
    d.faces.push_back({{0, angles.type0}, {edge, angles.type2}, {tb, angles.type1}});
  }
  return d;
}

AngleQ moussong_cycle_length(const DefiningGraph& g, const CycleSubgraph& cycle) {
  cycle.validate(g);
  AngleQ len = 0;
  for (int m : cycle.labels(g)) len += AngleQ(m - 1, m);
  return len;
}

AngleQ type0_bound_simplicial(const DefiningGraph& g, const CycleSubgraph& cycle) {
  cycle.validate(g);
  AngleQ bound = 2 - cycle.length();
  for (int m : cycle.labels(g)) bound += AngleQ(1, m);
  return bound;
}

AngleQ type0_bound_cubical(const DefiningGraph& g, const CycleSubgraph& cycle) {
  cycle.validate(g);
  if (girth(g) == ExtendedLength::finite(3)) throw ScopeError("girth >= 4");
  return AngleQ(4 - cycle.length(), 2);
}

}  // namespace artin
