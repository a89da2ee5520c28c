#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artin/defining_graph.hpp"
#include "artin/rational.hpp"

namespace artin {

/// An angle q*pi stored as the exact coefficient q.
using AngleQ = Rational;

/// Corner angles of the Moussong triangle <>, <a>, <a,b> for an edge of label m.
struct MoussongAngles {
  AngleQ type0;  // (m-1)/(2m)
  AngleQ type1;  // 1/2
  AngleQ type2;  // 1/(2m)
};

MoussongAngles moussong_corner_angles(int m);

struct DiagramVertex {
  std::string id;
  int type = 0;                // 0, 1 or 2
  std::optional<int> label;    // present iff type == 2
  bool boundary = false;
};

struct Corner {
  int vertex;  // index into DiscDiagram::vertices
  AngleQ angle;
};

/// Polygonal disc diagram with an explicit angle at every corner.
/// Faces are cyclic corner sequences; edges are implied by consecutive corners.
struct DiscDiagram {
  std::vector<DiagramVertex> vertices;
  std::vector<std::vector<Corner>> faces;

  /// Throws std::invalid_argument on any structural violation: bad references,
  /// faces with < 3 corners, angles outside [0, 2], type/label mismatch, an edge
  /// shared by more than two faces, V - E + F != 1, or boundary edges that do not
  /// form one cycle through exactly the declared boundary vertices.
  void validate() const;
};

/// kappa(P) = (2 - n) + sum of corner angles, in units of pi.
AngleQ face_curvature(std::span<const Corner> face);

/// pi - sum (boundary) or 2pi - sum (interior), in units of pi.
/// Throws std::invalid_argument for an interior vertex without corners.
AngleQ vertex_curvature(bool boundary, std::span<const AngleQ> corner_angles);

struct CurvatureLedger {
  std::vector<AngleQ> face;    // per face
  std::vector<AngleQ> vertex;  // per vertex
  AngleQ face_total = 0;
  AngleQ vertex_total = 0;
  AngleQ residual = 0;  // vertex_total + face_total - 2

  AngleQ total() const { return vertex_total + face_total; }
};

CurvatureLedger curvature_ledger(const DiscDiagram& d);

/// Combinatorial Gauss-Bonnet defect: sum kappa(v) + sum kappa(P) - 2 (units of pi).
AngleQ gauss_bonnet_residual(const DiscDiagram& d);

/// Moves `amount` of curvature from face `face` to each listed vertex. The total
/// curvature is unchanged.
CurvatureLedger redistribute(const CurvatureLedger& ledger, int face, std::span<const int> vertices,
                             AngleQ amount = AngleQ(1, 2));

/// Fan diagram filling the standard trees of a cycle: one interior type-0 vertex and
/// two Moussong triangles per edge of the cycle, meeting at that edge's type-2 vertex.
DiscDiagram fundamental_disc(const DefiningGraph& g, const CycleSubgraph& cycle);

/// Moussong length of a cycle in the link of a type-0 vertex: sum (m_e - 1)/m_e.
AngleQ moussong_cycle_length(const DefiningGraph& g, const CycleSubgraph& cycle);

/// Upper bound (2 - |cycle|) + sum 1/m_e on the curvature of a type-0 vertex.
AngleQ type0_bound_simplicial(const DefiningGraph& g, const CycleSubgraph& cycle);

/// Upper bound (4 - |cycle|)/2 in the cubical metric. Throws ScopeError when g has
/// girth 3.
AngleQ type0_bound_cubical(const DefiningGraph& g, const CycleSubgraph& cycle);

}  // namespace artin
