#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artin/extended_length.hpp"

namespace artin {

/// Undirected labelled edge between vertex indices, stored with u < v.
struct Edge {
  int u;
  int v;
  int label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite labelled simplicial graph (Gamma, m): the defining graph of an Artin group.
///
/// Vertices are identified by string ids and indexed in order of insertion.
/// Labels are integers >= 2; there are no loops and at most one edge per pair.
class DefiningGraph {
 public:
  DefiningGraph() = default;

  /// Adds a vertex if it is not present yet; returns its index.
  int add_vertex(std::string_view id);

  /// Adds an edge, creating missing endpoints. Throws std::invalid_argument on
  /// self-loops, duplicate edges and labels below 2.
  void add_edge(std::string_view a, std::string_view b, int label);
  void add_edge(int u, int v, int label);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  std::optional<int> index_of(std::string_view id) const;
  /// Label of {u, v}, or nullopt when they are not adjacent.
  std::optional<int> label(int u, int v) const;
  bool adjacent(int u, int v) const { return label(u, v).has_value(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::map<std::pair<int, int>, int> labels_;
};

/// Simple cycle given as a cyclic list of >= 3 distinct vertex indices.
struct CycleSubgraph {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  /// Edge labels in cyclic order: label of {v[i], v[i+1]}.
  std::vector<int> labels(const DefiningGraph& g) const;
  /// Throws std::invalid_argument unless this is a simple cycle of g.
  void validate(const DefiningGraph& g) const;
};

/// Partition of the vertex set into classes joined by odd-labelled paths.
struct OddPartition {
  std::vector<std::vector<int>> classes;  // each sorted, ordered by least member
  std::vector<int> class_of;              // vertex -> index into classes
};

/// Parses the line-oriented edge list format (`vertex <id>`, `edge <id> <id> <m>`,
/// `#` comments). Throws ParseError with the offending line number.
DefiningGraph parse_graph(std::string_view text);

/// Shortest cycle length over all components; infinite for forests.
ExtendedLength girth(const DefiningGraph& g);

/// Girth after subdividing every edge of label >= 3.
ExtendedLength weighted_girth(const DefiningGraph& g);

/// Replaces each edge of label >= 3 by a path of length two through a fresh vertex
/// named `<u>__<v>__mid` (endpoints in lexicographic order). All labels become 2.
DefiningGraph subdivide_big(const DefiningGraph& g);

OddPartition odd_classes(const DefiningGraph& g);

/// Rank of the abelianisation of A_Gamma: the number of odd classes.
int abelianization_rank(const DefiningGraph& g);

std::vector<int> leaves(const DefiningGraph& g);
std::vector<std::vector<int>> connected_components(const DefiningGraph& g);
int component_count(const DefiningGraph& g);
bool is_connected(const DefiningGraph& g);

/// Induced (chordless) cycles with at most `max_length` vertices, each listed once,
/// starting at its least vertex and oriented towards the smaller neighbour.
std::vector<CycleSubgraph> induced_cycles(const DefiningGraph& g, int max_length);

inline constexpr int kIsomorphismVertexBudget = 12;

/// Label-preserving isomorphism g -> h as a vertex map, the lexicographically least
/// one when several exist. Throws BudgetError above kIsomorphismVertexBudget vertices.
std::optional<std::vector<int>> labelled_isomorphic(const DefiningGraph& g, const DefiningGraph& h);

/// Canonical text serialisation (sorted edges by vertex name); stable across runs.
std::string to_text(const DefiningGraph& g);

/// 64-bit FNV-1a hash of to_text(g), hex encoded.
std::string graph_hash(const DefiningGraph& g);

}  // namespace artin
