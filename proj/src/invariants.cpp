#include "artin/invariants.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

#include "artin/errors.hpp"

namespace artin {

std::vector<int> separating_vertices(const DefiningGraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<BoostGraph::vertex_descriptor> cut;
  boost::articulation_points(bg, std::back_inserter(cut));
  std::vector<int> out(cut.begin(), cut.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool separating_vertex_exists(const DefiningGraph& g) { return !separating_vertices(g).empty(); }

bool is_labelled_cycle(const DefiningGraph& g) {
  if (g.vertex_count() < 3 || static_cast<int>(g.edge_count()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string label_set_string(const std::vector<int>& ls) {
  std::string s = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + std::to_string(ls[i]);
  return s + "}";
}

// Label sequence of a cycle read from its least rotation/reflection.
std::string cycle_label_string(const DefiningGraph& g) {
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  while (static_cast<int>(order.size()) < g.vertex_count()) {
    const auto& n = g.neighbours(cur);
    const int next = n[0] != prev ? n[0] : n[1];
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  const std::size_t k = order.size();
  std::vector<int> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = *g.label(order[i], order[(i + 1) % k]);
  std::vector<int> best = labels, cand(k);
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t i = 0; i < k; ++i) cand[i] = dir == 0 ? labels[(r + i) % k] : labels[(r + k - i) % k];
      best = std::min(best, cand);
    }
  std::string s = "(";
  for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(best[i]);
  return s + ")";
}

constexpr const char* kCiteComponents =
    "a disconnected defining graph is equivalent to a free-product splitting; components are the free factors";
constexpr const char* kCiteGirth =
    "girth of Gamma is the least n such that some labelled cycle Artin group A_{C_n} embeds in A_Gamma";
constexpr const char* kCiteRightAngled = "Baudisch: being right-angled is an isomorphism invariant";
constexpr const char* kCiteTwoDim = "two-dimensional iff every free abelian subgroup has rank <= 2";
constexpr const char* kCiteAbelian = "abelianisation of A_Gamma is free abelian of rank #odd classes";
constexpr const char* kCiteSeparating = "Jones-Mangioni-Sartori: having a separating vertex is an isomorphism invariant";
constexpr const char* kCiteLarge = "Martin-Vaskou: being of large type is preserved under isomorphism";
constexpr const char* kCiteLabels =
    "for isomorphic two-dimensional groups with the target of hyperbolic type, labels >= 3 of the source are "
    "labels of the target (applied in both directions)";
constexpr const char* kCiteWg =
    "for two-dimensional hyperbolic type, wg of Gamma is the least n such that R_{C_n} embeds in A_Gamma";
constexpr const char* kCiteCycles = "labelled cycle graphs with isomorphic Artin groups are isomorphic";
constexpr const char* kCiteCommutation = "wg of Gamma equals the girth of the commutation graph Y_Gamma";
constexpr const char* kCiteLowerBounds =
    "every cycle of standard trees has length >= girth, and wg >= wg of Gamma when triangle-free or hyperbolic type";

}  // namespace

InvariantReport report(const DefiningGraph& g, std::string source) {
  InvariantReport r;
  r.source = std::move(source);
  r.hash = graph_hash(g);
  r.components = component_count(g);
  r.vertex_count = g.vertex_count();
  r.edge_count = static_cast<int>(g.edge_count());
  r.girth = girth(g);
  r.weighted_girth = weighted_girth(g);
  r.odd_class_count = static_cast<int>(odd_classes(g).classes.size());
  r.abelianization_rank = r.odd_class_count;
  r.classes = classify(g);
  r.leaf_count = static_cast<int>(leaves(g).size());
  r.separating_vertex = separating_vertex_exists(g);
  std::set<int> big;
  for (const auto& e : g.edges())
    if (e.label >= 3) big.insert(e.label);
  r.big_labels.assign(big.begin(), big.end());
  r.labelled_cycle = is_labelled_cycle(g);
  try {
    r.commutation_girth = commutation_girth(g);
  } catch (const ScopeError& e) {
    r.commutation_girth_skipped = e.hypothesis();
  }
  try {
    r.lower_bounds = lower_bound_report(g);
  } catch (const ScopeError& e) {
    r.lower_bounds_skipped = e.hypothesis();
  }
  return r;
}

std::vector<ReportField> InvariantReport::fields() const {
  using S = Scope;
  std::vector<ReportField> f;
  f.push_back({"components", std::to_string(components), S::Proven, kCiteComponents});
  f.push_back({"vertices", std::to_string(vertex_count), S::Informational,
               "NOT-PROVEN-INVARIANT: open whether isomorphic groups have equally many vertices"});
  f.push_back({"edges", std::to_string(edge_count), S::Informational,
               "NOT-PROVEN-INVARIANT: open whether isomorphic groups have equally many edges"});
  f.push_back({"girth", girth.to_string(), S::Proven, kCiteGirth});
  const bool hyp = two_dimensional_hyperbolic();
  f.push_back({"weighted girth", weighted_girth.to_string(), hyp ? S::Proven : S::Informational,
               hyp ? kCiteWg : "invariance proven only for two-dimensional hyperbolic type"});
  f.push_back({"abelianization rank", std::to_string(abelianization_rank), S::Proven, kCiteAbelian});
  f.push_back({"odd classes", std::to_string(odd_class_count), S::Proven, kCiteAbelian});
  f.push_back({"right-angled", yes_no(classes.right_angled), S::Proven, kCiteRightAngled});
  f.push_back({"large type", yes_no(classes.large_type), S::Proven, kCiteLarge});
  f.push_back({"two-dimensional", yes_no(classes.two_dimensional), S::Proven, kCiteTwoDim});
  f.push_back({"hyperbolic type", classes.hyperbolic_type ? yes_no(*classes.hyperbolic_type) : "n/a",
               S::Informational, "Moussong criterion; gates the weighted-girth and label-set results"});
  f.push_back({"euclidean triangles", std::to_string(classes.euclidean_triangles.size()), S::Informational,
               "classification detail"});
  f.push_back({"spherical triangles", std::to_string(classes.spherical_triangles.size()), S::Informational,
               "classification detail"});
  f.push_back({"(2,2,2,2)-squares", std::to_string(classes.full_2222_squares.size()), S::Informational,
               "classification detail"});
  f.push_back({"leaves", std::to_string(leaf_count), S::Informational, "graph statistic"});
  f.push_back({"separating vertex", yes_no(separating_vertex), S::Proven,
               components > 1 ? std::string(kCiteSeparating) + " (evaluated per component)" : kCiteSeparating});
  f.push_back({"labels >= 3", label_set_string(big_labels), hyp ? S::Proven : S::Informational,
               hyp ? kCiteLabels : "invariance used only between two-dimensional hyperbolic-type graphs"});
  if (commutation_girth)
    f.push_back({"commutation girth", commutation_girth->to_string(), S::Proven, kCiteCommutation});
  else
    f.push_back({"commutation girth", "n/a", S::Informational, "skipped: requires " + commutation_girth_skipped});
  if (lower_bounds) {
    f.push_back({"tree-cycle length bound", lower_bounds->length_bound.to_string(), S::Proven, kCiteLowerBounds});
    if (lower_bounds->wg_bound)
      f.push_back({"tree-cycle wg bound", lower_bounds->wg_bound->to_string(), S::Proven, kCiteLowerBounds});
    else
      f.push_back({"tree-cycle wg bound", "n/a", S::Informational, "omitted: " + lower_bounds->wg_omitted_reason});
  } else {
    f.push_back({"tree-cycle length bound", "n/a", S::Informational, "skipped: requires " + lower_bounds_skipped});
  }
  return f;
}

std::string ComparisonVerdict::kind_name() const {
  switch (kind) {
    case Kind::Distinguished: return "Distinguished";
    case Kind::GroupsIsomorphic: return "GroupsIsomorphic";
    case Kind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

ComparisonVerdict compare(const DefiningGraph& g, const DefiningGraph& h) {
  return compare(g, report(g), h, report(h));
}

ComparisonVerdict compare(const DefiningGraph& g, const InvariantReport& rg, const DefiningGraph& h,
                          const InvariantReport& rh) {
  ComparisonVerdict v;
  // Returns true when the invariant separates the inputs; records agreement otherwise.
  auto check = [&v](const std::string& name, const std::string& a, const std::string& b, const char* cite) {
    if (a != b) {
      v.kind = ComparisonVerdict::Kind::Distinguished;
      v.invariant = name;
      v.first_value = a;
      v.second_value = b;
      v.citation = cite;
      return true;
    }
    v.agreeing.push_back({name, a});
    return false;
  };
  auto which = [](bool first_fails, bool second_fails) {
    if (first_fails && second_fails) return std::string("fails for both inputs");
    return std::string(first_fails ? "fails for the first input" : "fails for the second input");
  };

  if (check("component count", std::to_string(rg.components), std::to_string(rh.components), kCiteComponents)) return v;
  if (check("girth", rg.girth.to_string(), rh.girth.to_string(), kCiteGirth)) return v;
  if (check("right-angled", yes_no(rg.classes.right_angled), yes_no(rh.classes.right_angled), kCiteRightAngled))
    return v;
  if (check("two-dimensional", yes_no(rg.classes.two_dimensional), yes_no(rh.classes.two_dimensional), kCiteTwoDim))
    return v;
  if (check("abelianization rank", std::to_string(rg.abelianization_rank), std::to_string(rh.abelianization_rank),
            kCiteAbelian))
    return v;
  if (check("separating vertex", yes_no(rg.separating_vertex), yes_no(rh.separating_vertex), kCiteSeparating))
    return v;
  if (check("large type", yes_no(rg.classes.large_type), yes_no(rh.classes.large_type), kCiteLarge)) return v;

  const bool both_2d = rg.classes.two_dimensional && rh.classes.two_dimensional;
  const bool both_hyp = rg.two_dimensional_hyperbolic() && rh.two_dimensional_hyperbolic();
  auto skip_for_hyperbolic = [&](const std::string& name) {
    if (!both_2d)
      v.skipped.push_back({name, "two-dimensional",
                           which(!rg.classes.two_dimensional, !rh.classes.two_dimensional)});
    else
      v.skipped.push_back({name, "hyperbolic type",
                           which(!rg.two_dimensional_hyperbolic(), !rh.two_dimensional_hyperbolic())});
  };

  if (both_hyp) {
    if (check("labels >= 3", label_set_string(rg.big_labels), label_set_string(rh.big_labels), kCiteLabels)) return v;
    if (check("weighted girth", rg.weighted_girth.to_string(), rh.weighted_girth.to_string(), kCiteWg)) return v;
  } else {
    skip_for_hyperbolic("labels >= 3");
    skip_for_hyperbolic("weighted girth");
  }

  if (rg.labelled_cycle && rh.labelled_cycle) {
    if (auto iso = labelled_isomorphic(g, h)) {
      v.kind = ComparisonVerdict::Kind::GroupsIsomorphic;
      v.isomorphism = *iso;
      v.citation = kCiteCycles;
      return v;
    }
    v.kind = ComparisonVerdict::Kind::Distinguished;
    v.invariant = "labelled cycle";
    v.first_value = cycle_label_string(g);
    v.second_value = cycle_label_string(h);
    v.citation = kCiteCycles;
    return v;
  }
  v.skipped.push_back({"labelled-cycle rigidity", "labelled cycle", which(!rg.labelled_cycle, !rh.labelled_cycle)});
  return v;
}

}  // namespace artin
