#include "artin/classification.hpp"

#include <algorithm>

#include "artin/errors.hpp"

namespace artin {

std::vector<Triangle> triangle_census(const DefiningGraph& g) {
  std::vector<Triangle> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbours(a)) {
      if (b <= a) continue;
      for (int c : g.neighbours(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        Triangle t{{a, b, c}, {*g.label(a, b), *g.label(b, c), *g.label(a, c)}, 0};
        std::sort(t.labels.begin(), t.labels.end());
        t.angle_sum = Rational(1, t.labels[0]) + Rational(1, t.labels[1]) + Rational(1, t.labels[2]);
        out.push_back(t);
      }
    }
  std::sort(out.begin(), out.end(),
            [](const Triangle& x, const Triangle& y) { return x.vertices < y.vertices; });
  return out;
}

bool is_right_angled(const DefiningGraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.label == 2; });
}

bool is_large_type(const DefiningGraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.label >= 3; });
}

bool is_two_dimensional(const DefiningGraph& g) {
  const auto ts = triangle_census(g);
  return std::none_of(ts.begin(), ts.end(), [](const Triangle& t) { return t.spherical(); });
}

std::vector<CycleSubgraph> full_2222_squares(const DefiningGraph& g) {
  std::vector<CycleSubgraph> out;
  for (auto& c : induced_cycles(g, 4)) {
    if (c.length() != 4) continue;
    const auto ls = c.labels(g);
    if (std::all_of(ls.begin(), ls.end(), [](int m) { return m == 2; })) out.push_back(std::move(c));
  }
  return out;
}

bool is_hyperbolic_type(const DefiningGraph& g) {
  const auto ts = triangle_census(g);
  if (std::any_of(ts.begin(), ts.end(), [](const Triangle& t) { return t.spherical(); }))
    throw ScopeError("two-dimensional");
  if (std::any_of(ts.begin(), ts.end(), [](const Triangle& t) { return t.euclidean(); })) return false;
  return full_2222_squares(g).empty();
}

ClassReport classify(const DefiningGraph& g) {
  ClassReport r;
  r.right_angled = is_right_angled(g);
  r.large_type = is_large_type(g);
  for (const auto& t : triangle_census(g)) {
    if (t.spherical()) r.spherical_triangles.push_back(t);
    if (t.euclidean()) r.euclidean_triangles.push_back(t);
  }
  r.full_2222_squares = full_2222_squares(g);
  r.two_dimensional = r.spherical_triangles.empty();
  if (r.two_dimensional)
    r.hyperbolic_type = r.euclidean_triangles.empty() && r.full_2222_squares.empty();
  r.has_leaf = !leaves(g).empty();
  r.connected = is_connected(g);
  return r;
}

ExtendedLength commutation_girth(const DefiningGraph& g) {
  if (!is_two_dimensional(g)) throw ScopeError("two-dimensional");
  if (!is_hyperbolic_type(g)) throw ScopeError("hyperbolic type");
  if (!leaves(g).empty()) throw ScopeError("no leaves");
  return weighted_girth(g);
}

}  // namespace artin
