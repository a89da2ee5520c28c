#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "artin/defining_graph.hpp"
#include "artin/errors.hpp"
#include "oracles.hpp"

using namespace artin;
using oracle::cycle;

namespace {

int parse_error_line(const char* text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

ExtendedLength fin(int n) { return ExtendedLength::finite(n); }

}  // namespace

TEST_CASE("parse: single edge") {
  const auto g = parse_graph("edge a b 3\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.label(0, 1) == 3);
  CHECK(g.name(0) == "a");
}

TEST_CASE("parse: errors carry line numbers") {
  CHECK(parse_error_line("edge a a 2") == 1);
  CHECK(parse_error_line("edge a b 1") == 1);
  CHECK(parse_error_line("# c\n\nedge a b 2\nedge b a 3\n") == 4);
  CHECK(parse_error_line("edge a b x") == 1);
  CHECK(parse_error_line("edge a b 2.5") == 1);
  CHECK(parse_error_line("edge a b") == 1);
  CHECK(parse_error_line("edge a b 2\nnode c\n") == 2);
  CHECK(parse_error_line("vertex\n") == 1);
}

TEST_CASE("parse: comments, isolated vertices, order of first appearance") {
  const auto g = parse_graph("vertex z  # lonely\n\nedge b a 2 # trailing\n");
  REQUIRE(g.vertex_count() == 3);
  CHECK(g.vertices() == std::vector<std::string>{"z", "b", "a"});
  CHECK(g.degree(0) == 0);
  CHECK(g.edges()[0].u < g.edges()[0].v);
}

TEST_CASE("add_edge rejects malformed edges") {
  DefiningGraph g;
  CHECK_THROWS_AS(g.add_edge("a", "a", 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge("a", "b", 1), std::invalid_argument);
  g.add_edge("a", "b", 2);
  CHECK_THROWS_AS(g.add_edge("b", "a", 2), std::invalid_argument);
}

TEST_CASE("girth examples") {
  CHECK(girth(cycle({5, 7, 2})) == fin(3));
  CHECK(girth(parse_graph("edge a b 2\nedge b c 2\nedge c d 2")).is_infinite());
  CHECK(girth(parse_graph("edge a b 2\nedge b c 2\nedge c d 2\nedge d a 2\nedge a c 2")) == fin(3));
  CHECK(girth(cycle({2, 2, 2, 2, 2, 2, 2})) == fin(7));
  CHECK(girth(DefiningGraph{}).is_infinite());
}

TEST_CASE("weighted girth examples") {
  CHECK(weighted_girth(cycle({2, 2, 2, 2})) == fin(4));
  CHECK(weighted_girth(cycle({3, 3, 3})) == fin(6));
  CHECK(weighted_girth(cycle({2, 2, 2, 2, 3})) == fin(6));
  CHECK(weighted_girth(parse_graph("edge a b 7\nedge b c 2")).is_infinite());
}

TEST_CASE("subdivide_big") {
  const auto p = subdivide_big(parse_graph("edge b a 5"));
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 2);
  REQUIRE(p.index_of("a__b__mid"));
  CHECK(p.degree(*p.index_of("a__b__mid")) == 2);

  const auto same = subdivide_big(cycle({2, 2, 2}));
  CHECK(same.vertex_count() == 3);
  CHECK(girth(same) == fin(3));

  const auto hex = subdivide_big(cycle({3, 3, 3}));
  CHECK(hex.vertex_count() == 6);
  CHECK(hex.edge_count() == 6);
  CHECK(girth(hex) == fin(6));
  for (const auto& e : hex.edges()) CHECK(e.label == 2);
}

TEST_CASE("girth and weighted girth agree with exhaustive cycle enumeration") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = oracle::random_graph(rng, 9, trial % 2 ? 0.3 : 0.55);
    CAPTURE(to_text(g));
    CHECK(oracle::length_value(girth(g)) == oracle::brute_girth(g));
    CHECK(oracle::length_value(weighted_girth(g)) == oracle::brute_wg(g));
    CHECK(weighted_girth(g) == girth(subdivide_big(g)));
  }
}

TEST_CASE("weighted girth sits between girth and twice girth") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(rng, 8, 0.5);
    const auto gi = girth(g), w = weighted_girth(g);
    CHECK(gi <= w);
    if (gi.is_finite()) CHECK(w.value() <= 2 * gi.value());
    else CHECK(w.is_infinite());
  }
}

TEST_CASE("odd classes") {
  const auto even = cycle({2, 4, 6, 8});
  CHECK(odd_classes(even).classes.size() == 4);
  CHECK(abelianization_rank(even) == 4);

  const auto edge = parse_graph("edge a b 3");
  CHECK(odd_classes(edge).classes.size() == 1);

  const auto mixed = cycle({3, 4, 6});
  const auto p = odd_classes(mixed);
  CHECK(p.classes.size() == 2);
  CHECK(p.class_of[0] == p.class_of[1]);
  CHECK(p.class_of[2] != p.class_of[0]);

  CHECK(abelianization_rank(cycle({3, 3, 3})) == 1);
  CHECK(abelianization_rank(cycle({2, 4, 4})) == 3);
  CHECK(abelianization_rank(cycle({2, 3, 6})) == 2);
}

TEST_CASE("odd classes ignore the choice of even labels") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 8, 0.4, 7);
    DefiningGraph h;
    for (const auto& v : g.vertices()) h.add_vertex(v);
    for (const auto& e : g.edges()) h.add_edge(e.u, e.v, e.label % 2 == 0 ? 2 * e.label : e.label);
    CHECK(odd_classes(g).class_of == odd_classes(h).class_of);
  }
}

TEST_CASE("leaves and connectivity") {
  const auto p3 = parse_graph("edge u1 u2 2\nedge u2 u3 2");
  CHECK(leaves(p3) == std::vector<int>{0, 2});
  const auto c5 = cycle({2, 2, 2, 2, 2});
  CHECK(leaves(c5).empty());
  CHECK(is_connected(c5));
  const auto two = parse_graph("edge a b 2\nedge c d 2");
  CHECK_FALSE(is_connected(two));
  CHECK(component_count(two) == 2);
  CHECK(leaves(two).size() == 4);
  CHECK(component_count(parse_graph("vertex a\nvertex b\nvertex c")) == 3);
}

TEST_CASE("component count matches a search oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 9, 0.2);
    CHECK(component_count(g) == oracle::brute_components(g));
  }
}

TEST_CASE("induced cycles") {
  // square with one diagonal: two triangles, the square itself has a chord
  const auto g = parse_graph("edge a b 2\nedge b c 2\nedge c d 2\nedge d a 2\nedge a c 2");
  const auto cs = induced_cycles(g, 6);
  CHECK(cs.size() == 2);
  for (const auto& c : cs) CHECK(c.length() == 3);
  CHECK(induced_cycles(cycle({2, 2, 2, 2, 2, 2, 2}), 6).empty());
  CHECK(induced_cycles(cycle({2, 2, 2, 2, 2, 2, 2}), 7).size() == 1);

  // oracle: an induced cycle is a vertex set whose induced subgraph is connected and 2-regular
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto h = oracle::random_graph(rng, 8, 0.45);
    const int n = h.vertex_count();
    std::set<std::vector<int>> expected;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> vs;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) vs.push_back(v);
      if (vs.size() < 3 || vs.size() > 6) continue;
      bool regular = true;
      for (int v : vs) {
        int d = 0;
        for (int w : vs) d += h.adjacent(v, w);
        regular = regular && d == 2;
      }
      if (!regular) continue;
      DefiningGraph sub;
      for (int v : vs) sub.add_vertex(h.name(v));
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (h.adjacent(vs[i], vs[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j), 2);
      if (oracle::brute_components(sub) == 1) expected.insert(vs);
    }
    std::set<std::vector<int>> got;
    for (const auto& c : induced_cycles(h, 6)) {
      c.validate(h);
      auto vs = c.vertices;
      std::sort(vs.begin(), vs.end());
      CHECK(got.insert(vs).second);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("cycle subgraph validation") {
  const auto g = cycle({2, 3, 4, 5});
  CycleSubgraph ok{{0, 1, 2, 3}};
  CHECK_NOTHROW(ok.validate(g));
  CHECK(ok.labels(g) == std::vector<int>{2, 3, 4, 5});
  CHECK_THROWS(CycleSubgraph{{0, 2, 1, 3}}.validate(g));
  CHECK_THROWS(CycleSubgraph{{0, 1}}.validate(g));
  CHECK_THROWS(CycleSubgraph{{0, 1, 1}}.validate(g));
}

TEST_CASE("labelled isomorphism") {
  CHECK(labelled_isomorphic(cycle({2, 3, 2, 3}), cycle({3, 2, 3, 2})));
  CHECK_FALSE(labelled_isomorphic(cycle({2, 2, 4, 4}), cycle({2, 4, 2, 4})));
  CHECK_FALSE(labelled_isomorphic(cycle({2, 2, 2}), parse_graph("edge a b 2\nedge b c 2")));

  const auto iso = labelled_isomorphic(cycle({2, 3, 4}), cycle({4, 3, 2}));
  REQUIRE(iso);
  const auto g = cycle({2, 3, 4}), h = cycle({4, 3, 2});
  for (const auto& e : g.edges()) CHECK(h.label((*iso)[e.u], (*iso)[e.v]) == e.label);

  DefiningGraph big;
  for (int i = 0; i < 13; ++i) big.add_vertex("x" + std::to_string(i));
  CHECK_THROWS_AS(labelled_isomorphic(big, big), BudgetError);
}

TEST_CASE("labelled isomorphism agrees with trying every permutation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 6, 0.5, 3);
    // shuffled copy is always isomorphic; an independent graph usually is not
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DefiningGraph h;
    for (int i = 0; i < g.vertex_count(); ++i) h.add_vertex("w" + std::to_string(i));
    for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v], e.label);
    CHECK(labelled_isomorphic(g, h).has_value());
    CHECK(labelled_isomorphic(g, g).has_value());

    const auto k = oracle::random_graph(rng, 6, 0.5, 3);
    const bool expected = oracle::brute_isomorphic(g, k);
    CHECK(labelled_isomorphic(g, k).has_value() == expected);
    CHECK(labelled_isomorphic(k, g).has_value() == expected);
  }
}

TEST_CASE("text round trip and hash") {
  const auto g = parse_graph("vertex q\nedge b a 3\nedge a c 2\n");
  const auto back = parse_graph(to_text(g));
  CHECK(to_text(back) == to_text(g));
  CHECK(graph_hash(back) == graph_hash(g));
  CHECK(graph_hash(g).size() == 16);
  CHECK(graph_hash(g) != graph_hash(parse_graph("edge b a 3\nedge a c 2\n")));
}
