// artin: invariant reports and pairwise distinguishers for Artin group
// defining graphs. Exit status: 0 inconclusive/isomorphic, 1 distinguished,
// 2 bad input.

#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "artin/classification.hpp"
#include "artin/curvature.hpp"
#include "artin/defining_graph.hpp"
#include "artin/errors.hpp"
#include "artin/invariants.hpp"
#include "artin/io.hpp"
#include "artin/raag.hpp"
#include "artin/tree_cycles.hpp"

namespace {

using namespace artin;

constexpr int kExitInput = 2;

void print_report(const InvariantReport& r) {
  std::cout << "graph " << (r.source.empty() ? "<stdin>" : r.source) << "  hash " << r.hash << "\n";
  for (const auto& f : r.fields()) {
    std::cout << "  " << f.name << ": " << f.value << "  ["
              << (f.scope == Scope::Proven ? "PROVEN" : "INFORMATIONAL") << "] " << f.basis << "\n";
  }
}

// The girth case is re-checked from scratch so a wrong verdict cannot slip out.
void recheck_girth(const ComparisonVerdict& v, const DefiningGraph& g, const DefiningGraph& h) {
  if (v.kind != ComparisonVerdict::Kind::Distinguished || v.invariant != "girth") return;
  if (girth(g) == girth(h)) throw std::logic_error("girth verdict issued for graphs of equal girth");
}

void print_verdict(const ComparisonVerdict& v) {
  std::cout << v.kind_name();
  if (v.kind == ComparisonVerdict::Kind::Distinguished)
    std::cout << ": " << v.invariant << " " << v.first_value << " vs " << v.second_value << "\n  by: " << v.citation;
  if (v.kind == ComparisonVerdict::Kind::GroupsIsomorphic) {
    std::cout << ": vertex map";
    for (std::size_t i = 0; i < v.isomorphism.size(); ++i) std::cout << " " << i << "->" << v.isomorphism[i];
    std::cout << "\n  by: " << v.citation;
  }
  std::cout << "\n";
  for (const auto& a : v.agreeing) std::cout << "  agrees  " << a.name << " = " << a.value << "\n";
  for (const auto& s : v.skipped)
    std::cout << "  skipped " << s.name << ": requires " << s.hypothesis << " (" << s.detail << ")\n";
}

Metric parse_metric(const std::string& s) {
  if (s == "simplicial") return Metric::Simplicial;
  if (s == "cubical") return Metric::Cubical;
  throw std::invalid_argument("unknown metric '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of Artin groups from their defining graphs"};
  app.require_subcommand(1);

  std::string file, file2, pattern_file, metric = "simplicial", config;
  bool json_out = false, wedges = false, dot_out = false;
  int wg = 0, radius = 1;

  auto* report_cmd = app.add_subcommand("report", "Invariant report with scope tags");
  report_cmd->add_option("file", file)->required();
  report_cmd->add_flag("--json", json_out);

  auto* compare_cmd = app.add_subcommand("compare", "Try to tell two Artin groups apart");
  compare_cmd->add_option("first", file)->required();
  compare_cmd->add_option("second", file2)->required();
  compare_cmd->add_flag("--json", json_out);

  auto* girth_cmd = app.add_subcommand("girth", "Girth of the defining graph");
  girth_cmd->add_option("file", file)->required();
  auto* wg_cmd = app.add_subcommand("wg", "Weighted girth (labels >= 3 count twice)");
  wg_cmd->add_option("file", file)->required();

  auto* configs_cmd = app.add_subcommand("configs", "Cycles of standard trees of a given weighted girth");
  configs_cmd->add_option("--wg", wg)->required()->check(CLI::Range(3, 16));
  configs_cmd->add_flag("--wedges", wedges);

  auto* budget_cmd = app.add_subcommand("budget", "Curvature budget test for one configuration");
  budget_cmd->add_option("file", file)->required();
  budget_cmd->add_option("--metric", metric)->check(CLI::IsMember({"simplicial", "cubical"}));
  budget_cmd->add_option("--config", config)->required();

  auto* gb_cmd = app.add_subcommand("gb", "Gauss-Bonnet ledger of a disc diagram (JSON)");
  gb_cmd->add_option("diagram", file)->required();
  gb_cmd->add_flag("--json", json_out);

  auto* ball_cmd = app.add_subcommand("extball", "Ball of the extension graph of a RAAG");
  ball_cmd->add_option("file", file)->required();
  ball_cmd->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  ball_cmd->add_flag("--dot", dot_out);

  auto* embed_cmd = app.add_subcommand("embed", "Search for R_pattern inside R_graph");
  embed_cmd->add_option("pattern", pattern_file)->required();
  embed_cmd->add_option("file", file)->required();
  embed_cmd->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  dot_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*report_cmd) {
      const auto r = report(load_graph_file(file), file);
      if (json_out) std::cout << report_to_json(r).dump(2) << "\n";
      else print_report(r);
      return 0;
    }
    if (*compare_cmd) {
      const auto g = load_graph_file(file);
      const auto h = load_graph_file(file2);
      const auto v = compare(g, h);
      recheck_girth(v, g, h);
      if (json_out) std::cout << verdict_to_json(v).dump(2) << "\n";
      else print_verdict(v);
      return v.kind == ComparisonVerdict::Kind::Distinguished ? 1 : 0;
    }
    if (*girth_cmd) {
      std::cout << girth(load_graph_file(file)).to_string() << "\n";
      return 0;
    }
    if (*wg_cmd) {
      std::cout << weighted_girth(load_graph_file(file)).to_string() << "\n";
      return 0;
    }
    if (*configs_cmd) {
      const auto simple = enumerate_simple_configs(wg);
      for (const auto& c : simple) std::cout << c.to_string() << "\n";
      std::cout << "simple: " << simple.size() << "\n";
      if (wedges) {
        const auto ws = enumerate_wedge_configs(wg);
        for (const auto& c : ws) std::cout << c.to_string() << "\n";
        std::cout << "wedges: " << ws.size() << "\ntotal: " << simple.size() + ws.size() << "\n";
      }
      return 0;
    }
    if (*budget_cmd) {
      const auto g = load_graph_file(file);
      const auto c = TreeCycleConfig::parse(config);
      const auto v = budget_check(c, class_budget_from_graph(g, parse_metric(metric)));
      std::cout << c.to_string() << " wg=" << config_wg(c) << "\n"
                << (v.feasible ? "Feasible" : "Infeasible") << ": " << v.certificate << "\n";
      return 0;
    }
    if (*gb_cmd) {
      const auto d = diagram_from_json(nlohmann::json::parse(read_file(file)));
      const auto l = curvature_ledger(d);
      if (json_out) {
        std::cout << ledger_to_json(d, l).dump(2) << "\n";
        return 0;
      }
      for (std::size_t i = 0; i < l.face.size(); ++i) std::cout << "face " << i << ": " << to_string(l.face[i]) << "\n";
      for (std::size_t i = 0; i < l.vertex.size(); ++i)
        std::cout << "vertex " << d.vertices[i].id << ": " << to_string(l.vertex[i]) << "\n";
      std::cout << "faces total: " << to_string(l.face_total) << "\nvertices total: " << to_string(l.vertex_total)
                << "\nresidual: " << to_string(l.residual) << "  (units of pi)\n";
      return 0;
    }
    if (*ball_cmd) {
      const Raag host(load_graph_file(file));
      const auto ball = ext_ball(host, radius);
      if (dot_out) {
        std::cout << ball_to_dot(host, ball);
      } else {
        std::cout << "radius " << radius << ": " << ball.size() << " vertices, " << ball.edge_count() << " edges\n";
        for (const auto& v : ball.vertices) std::cout << "  " << ext_vertex_name(host, v) << "\n";
      }
      return 0;
    }
    if (*embed_cmd) {
      const auto pattern = load_graph_file(pattern_file);
      if (!is_right_angled(pattern)) std::cerr << "warning: pattern labels other than 2 are ignored\n";
      const auto host = load_graph_file(file);
      const auto cert = certify_raag_embedding(pattern, host, radius);
      if (!cert) {
        std::cout << "Unknown: no induced copy in the radius-" << radius << " ball\n";
        return 0;
      }
      const Raag raag(host);
      std::cout << "Embeds: induced copy at radius " << radius << "\n";
      for (int p = 0; p < pattern.vertex_count(); ++p)
        std::cout << "  " << pattern.name(p) << " -> " << ext_vertex_name(raag, cert->images[p]) << "\n";
      return 0;
    }
    if (*dot_cmd) {
      std::cout << graph_to_dot(load_graph_file(file));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ScopeError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInput;
}
