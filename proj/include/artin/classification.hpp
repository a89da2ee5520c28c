#pragma once

#include <array>
#include <optional>
#include <vector>

#include "artin/defining_graph.hpp"
#include "artin/rational.hpp"

namespace artin {

/// A 3-clique with its labels sorted p <= q <= r and the exact sum 1/p + 1/q + 1/r.
struct Triangle {
  std::array<int, 3> vertices;  // ascending indices
  std::array<int, 3> labels;    // ascending
  Rational angle_sum;

  bool spherical() const { return angle_sum > 1; }
  bool euclidean() const { return angle_sum == Rational(1); }
};

std::vector<Triangle> triangle_census(const DefiningGraph& g);

bool is_right_angled(const DefiningGraph& g);
bool is_large_type(const DefiningGraph& g);

/// No triangle with 1/p + 1/q + 1/r > 1. A spherical-type parabolic on three or more
/// generators always contains a spherical triangle, so triangles are enough.
bool is_two_dimensional(const DefiningGraph& g);

/// Induced 4-cycles whose four edges all carry label 2.
std::vector<CycleSubgraph> full_2222_squares(const DefiningGraph& g);

/// Moussong's criterion: every triangle has sum < 1 and there is no induced
/// (2,2,2,2)-square. Throws ScopeError("two-dimensional") on other input.
bool is_hyperbolic_type(const DefiningGraph& g);

struct ClassReport {
  bool right_angled = false;
  bool large_type = false;
  bool two_dimensional = false;
  std::optional<bool> hyperbolic_type;  // present iff two_dimensional
  std::vector<Triangle> euclidean_triangles;
  std::vector<Triangle> spherical_triangles;
  std::vector<CycleSubgraph> full_2222_squares;
  bool has_leaf = false;
  bool connected = true;
};

ClassReport classify(const DefiningGraph& g);

/// Girth of the commutation graph Y_Gamma, which equals the weighted girth for
/// leafless two-dimensional hyperbolic-type graphs. Throws ScopeError naming the
/// first failed hypothesis.
ExtendedLength commutation_girth(const DefiningGraph& g);

}  // namespace artin
