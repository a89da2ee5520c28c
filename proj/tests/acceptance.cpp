// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "artin/curvature.hpp"
#include "artin/io.hpp"
#include "artin/tree_cycles.hpp"
#include "oracles.hpp"

using namespace artin;
using Kind = ComparisonVerdict::Kind;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<std::string(bool&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%s) [%.3fs]\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str(), s);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CycleSubgraph whole(const DefiningGraph& g) {
  CycleSubgraph c;
  for (int v = 0; v < g.vertex_count(); ++v) c.vertices.push_back(v);
  return c;
}

DefiningGraph star(int k) {
  DefiningGraph g;
  g.add_vertex("u0");
  for (int i = 1; i <= k; ++i) g.add_edge("u0", "u" + std::to_string(i), 2);
  return g;
}

DefiningGraph path(int n) {
  DefiningGraph g;
  g.add_vertex("p0");
  for (int i = 1; i < n; ++i) g.add_edge("p" + std::to_string(i - 1), "p" + std::to_string(i), 2);
  return g;
}

// Dihedral orbits of S/B words with k letters, b of them B.
std::size_t necklaces(int k, int b) {
  std::set<std::vector<int>> reps;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != b) continue;
    std::vector<int> w(k), best;
    for (int i = 0; i < k; ++i) w[i] = (mask >> i) & 1;
    for (int r = 0; r < k; ++r)
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> x(k);
        for (int i = 0; i < k; ++i) x[i] = w[flip ? (r - i + k) % k : (r + i) % k];
        if (best.empty() || x < best) best = x;
      }
    reps.insert(best);
  }
  return reps.size();
}

std::vector<int> labels_of(int n, int code) {
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i, code /= 3) l[i] = 2 + code % 3;
  return l;
}

}  // namespace

int main() {
  criterion(1, "girth distinguishes the girth-3 / girth-4 pair", [](bool& ok) {
    const auto g = parse_graph("edge v0 v1 4\nedge v1 v2 4\nedge v2 v0 4\nedge v2 v3 2\nedge v3 v4 2\nedge v4 v0 2");
    const auto h = parse_graph("edge x a 4\nedge x b 2\nedge x c 2\nedge y a 2\nedge y b 2\nedge y c 2");
    const auto t0 = std::chrono::steady_clock::now();
    const auto v = compare(g, h);
    const double s = seconds_since(t0);
    ok = v.kind == Kind::Distinguished && v.invariant == "girth" && v.first_value == "3" && v.second_value == "4" &&
         s < 1.0;
    return v.kind_name() + " on " + v.invariant + " " + v.first_value + " vs " + v.second_value;
  });

  criterion(2, "weighted girth separates equal-girth groups", [](bool& ok) {
    const auto g = parse_graph("edge x a 4\nedge x b 4\nedge x c 2\nedge y a 2\nedge y b 2\nedge y c 4");
    const auto h = parse_graph("edge x a 4\nedge x b 4\nedge x c 2\nedge y a 2\nedge y b 2\nedge y c 2");
    const auto v = compare(g, h);
    bool girth_agrees = false;
    for (const auto& a : v.agreeing) girth_agrees = girth_agrees || (a.name == "girth" && a.value == "4");
    ok = v.kind == Kind::Distinguished && v.invariant == "weighted girth" && v.first_value == "6" &&
         v.second_value == "5" && girth_agrees;
    return v.invariant + " " + v.first_value + " vs " + v.second_value + (girth_agrees ? ", girth 4 agrees" : "");
  });

  criterion(3, "Gauss-Bonnet residual vanishes on 100 fundamental discs", [](bool& ok) {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> len(3, 10), lab(2, 12);
    const auto t0 = std::chrono::steady_clock::now();
    int nonzero = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<int> labels(len(rng));
      for (auto& m : labels) m = lab(rng);
      const auto g = oracle::cycle(labels);
      if (gauss_bonnet_residual(fundamental_disc(g, whole(g))) != Rational(0)) ++nonzero;
    }
    const double s = seconds_since(t0);
    ok = nonzero == 0 && s < 5.0;
    return std::to_string(nonzero) + " nonzero residuals";
  });

  criterion(4, "weighted girth equals girth of the subdivision and brute force", [](bool& ok) {
    std::mt19937 rng(4);
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto g = oracle::random_graph(rng, 9, i % 2 ? 0.35 : 0.55, 6);
      const int wg = oracle::length_value(weighted_girth(g));
      if (wg != oracle::length_value(girth(subdivide_big(g))) || wg != oracle::brute_wg(g)) ++mismatches;
    }
    ok = mismatches == 0;
    return std::to_string(mismatches) + " mismatches in 1000 graphs";
  });

  criterion(5, "tree-cycle configuration counts", [](bool& ok) {
    const auto s4 = enumerate_simple_configs(4).size();
    const auto s5 = enumerate_simple_configs(5).size();
    const auto w5 = enumerate_wedge_configs(5).size();
    const auto s6 = enumerate_simple_configs(6).size();
    std::size_t oracle6 = 0;
    for (int k = 3; k <= 6; ++k)
      if (6 - k <= k) oracle6 += necklaces(k, 6 - k);
    ok = s4 == 2 && s5 == 3 && w5 == 2 && s5 + w5 == 5 && s6 == 5 && oracle6 == s6;
    return "simple(4)=" + std::to_string(s4) + " simple(5)=" + std::to_string(s5) + " wedges(5)=" +
           std::to_string(w5) + " simple(6)=" + std::to_string(s6) + " necklaces(6)=" + std::to_string(oracle6);
  });

  criterion(6, "girth-3 hyperbolic hosts exclude every configuration with wg <= 4", [](bool& ok) {
    const std::vector<std::pair<std::string, DefiningGraph>> hosts{
        {"(2,3,7)", oracle::cycle({2, 3, 7})},
        {"(2,4,5)", oracle::cycle({2, 4, 5})},
        {"(3,3,4)", oracle::cycle({3, 3, 4})},
        {"K4 labels 4", parse_graph("edge a b 4\nedge a c 4\nedge a d 4\nedge b c 4\nedge b d 4\nedge c d 4")},
    };
    std::string out;
    for (const auto& [name, g] : hosts) {
      const auto b = class_budget_from_graph(g, Metric::Simplicial);
      ok = ok && girth(g) == ExtendedLength::finite(3) && b.type0_cap && *b.type0_cap < 0;
      if (!b.type0_cap) continue;
      std::vector<TreeCycleConfig> configs;
      for (int w = 3; w <= 4; ++w) {
        for (const auto& c : enumerate_simple_configs(w)) configs.push_back(c);
        for (const auto& c : enumerate_wedge_configs(w)) configs.push_back(c.first()), configs.push_back(c.second());
      }
      for (const auto& c : configs) {
        const auto v = budget_check(c, b);
        ok = ok && !v.feasible;
        std::printf("  %s %s: %s\n", name.c_str(), c.to_string().c_str(), v.certificate.c_str());
      }
      out += name + " cap " + to_string(*b.type0_cap) + "; ";
    }
    return out;
  });

  criterion(7, "extension graphs of stars", [](bool& ok) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 2; k <= 4; ++k) {
      const auto ball = ext_ball(Raag(star(k)), 2);
      int centre = -1;
      for (int v = 0; v < static_cast<int>(ball.size()); ++v)
        if (ball.adjacency[v].size() + 1 == ball.size()) centre = v;
      ok = ok && centre >= 0 && ball.edge_count() + 1 == ball.size();
    }
    const auto ball = ext_ball(Raag(star(2)), 2);
    ok = ok && find_induced(path(3), ball).has_value() && !find_induced(path(4), ball).has_value();
    for (int n = 3; n <= 5; ++n) ok = ok && !find_induced(oracle::cycle(std::vector<int>(n, 2)), ball).has_value();
    ok = ok && seconds_since(t0) < 10.0;
    return "radius 2, k = 2..4, ball(S_2) has " + std::to_string(ball.size()) + " vertices";
  });

  criterion(8, "labelled cycles are isomorphic iff dihedrally equivalent", [](bool& ok) {
    std::vector<std::vector<int>> labels;
    std::vector<DefiningGraph> graphs;
    std::vector<InvariantReport> reports;
    for (int n = 3; n <= 6; ++n) {
      int count = 1;
      for (int i = 0; i < n; ++i) count *= 3;
      for (int code = 0; code < count; ++code) {
        labels.push_back(labels_of(n, code));
        graphs.push_back(oracle::cycle(labels.back()));
        reports.push_back(report(graphs.back()));
      }
    }
    std::size_t wrong = 0, pairs = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i; j < graphs.size(); ++j) {
        if (labels[i].size() != labels[j].size()) continue;
        ++pairs;
        const auto v = compare(graphs[i], reports[i], graphs[j], reports[j]);
        const bool iso = v.kind == Kind::GroupsIsomorphic;
        if (iso != oracle::dihedral_equivalent(labels[i], labels[j])) ++wrong;
      }
    ok = wrong == 0;
    return std::to_string(pairs) + " same-length pairs, " + std::to_string(wrong) + " wrong";
  });

  criterion(9, "weighted-girth verdicts only on two-dimensional hyperbolic inputs", [](bool& ok) {
    std::mt19937 rng(9);
    std::vector<DefiningGraph> graphs;
    std::vector<InvariantReport> reports;
    // random labellings of a few skeletons, so pairs often agree on the early invariants
    const std::vector<std::vector<std::pair<int, int>>> skeletons{
        {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}},                  // K_{2,3}
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}},          // theta
        {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 0}},                  // chorded 5-cycle
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}},                  // K_4
    };
    std::uniform_int_distribution<int> lab(2, 4);
    for (int i = 0; i < 50; ++i) {
      std::vector<std::tuple<int, int, int>> edges;
      int n = 0;
      for (const auto& [u, v] : skeletons[i % skeletons.size()]) {
        edges.emplace_back(u, v, lab(rng));
        n = std::max({n, u + 1, v + 1});
      }
      graphs.push_back(oracle::from_edges(n, edges));
      reports.push_back(report(graphs.back()));
    }
    int cited = 0, violations = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = 0; j < graphs.size(); ++j) {
        const auto j_out = verdict_to_json(compare(graphs[i], reports[i], graphs[j], reports[j]));
        if (j_out["verdict"] != "Distinguished" || j_out["invariant"] != "weighted girth") continue;
        ++cited;
        for (const auto* g : {&graphs[i], &graphs[j]})
          if (!is_two_dimensional(*g) || !is_hyperbolic_type(*g)) ++violations;
      }
    ok = violations == 0 && cited > 0;
    return std::to_string(cited) + " weighted-girth verdicts, " + std::to_string(violations) + " out of scope";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
