#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/defining_graph.hpp"

namespace artin {

/// One letter s^{+1} or s^{-1} of a word over the standard generators.
struct Letter {
  int gen;
  int sign;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  /// Total order used by canonical forms: generator index, then + before -.
  int key() const { return 2 * gen + (sign < 0 ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) { return a.key() <=> b.key(); }
};

struct RaagWord {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  RaagWord inverse() const;

  friend RaagWord operator*(const RaagWord& a, const RaagWord& b);
  friend bool operator==(const RaagWord&, const RaagWord&) = default;
  friend auto operator<=>(const RaagWord& a, const RaagWord& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    return a.letters <=> b.letters;
  }
};

/// Right-angled Artin group R_Gamma over an all-labels-2 defining graph.
class Raag {
 public:
  /// Throws ScopeError("right-angled") if some label differs from 2.
  explicit Raag(DefiningGraph graph);

  const DefiningGraph& graph() const { return graph_; }
  int rank() const { return graph_.vertex_count(); }

  /// Generators commute iff equal or adjacent.
  bool commute(int a, int b) const { return a == b || graph_.adjacent(a, b); }
  bool in_star(int base, int gen) const { return commute(base, gen); }

  /// Parses space-separated letters `a`, `a^-1` (or `A` style is not accepted).
  /// Throws std::invalid_argument on unknown generators.
  RaagWord parse_word(std::string_view text) const;
  std::string format(const RaagWord& w) const;

 private:
  DefiningGraph graph_;
};

/// Geodesic, lexicographically least representative of the element w: cancel
/// pairs s^e ... s^-e separated only by letters commuting with s, then take the
/// least shuffle. Equal elements have equal normal forms.
RaagWord normal_form(const Raag& host, const RaagWord& w);

bool commutes(const Raag& host, const RaagWord& a, const RaagWord& b);

/// The conjugate base^conjugator = conjugator^-1 base conjugator of a generator.
/// The conjugator is the shortest representative of its coset C(base) * g, where
/// C(base) is generated by the star of base; so structural equality is equality
/// of group elements.
struct ExtVertex {
  int base;
  RaagWord conjugator;

  friend bool operator==(const ExtVertex&, const ExtVertex&) = default;
  friend auto operator<=>(const ExtVertex& a, const ExtVertex& b) {
    if (auto c = a.conjugator.size() <=> b.conjugator.size(); c != 0) return c;
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.conjugator.letters <=> b.conjugator.letters;
  }
};

/// Reduces g to the shortest element of C(base) * g.
RaagWord canonical_conjugator(const Raag& host, int base, const RaagWord& g);

ExtVertex make_ext_vertex(const Raag& host, int base, const RaagWord& g);

/// The group element conjugator^-1 base conjugator.
RaagWord ext_element(const ExtVertex& v);

inline constexpr std::size_t kDefaultBallBudget = 20'000;

/// Finite ball of the extension graph: conjugates of generators whose canonical
/// conjugator has length <= radius, joined when they commute.
struct ExtBall {
  int radius = 0;
  std::vector<ExtVertex> vertices;           // sorted
  std::vector<std::vector<int>> adjacency;   // sorted neighbour lists

  std::size_t size() const { return vertices.size(); }
  bool adjacent(int a, int b) const;
  std::size_t edge_count() const;
};

/// Throws BudgetError (with the count reached) past `budget` vertices.
ExtBall ext_ball(const Raag& host, int radius, std::size_t budget = kDefaultBallBudget);

/// Plain undirected graph as sorted adjacency lists.
using AdjacencyLists = std::vector<std::vector<int>>;

AdjacencyLists adjacency_of(const DefiningGraph& g);

/// Induced embedding pattern -> host (pattern vertex i maps to result[i]), found by
/// backtracking with degree pruning in ascending candidate order.
std::optional<std::vector<int>> find_induced(const AdjacencyLists& pattern, const AdjacencyLists& host);
std::optional<std::vector<int>> find_induced(const DefiningGraph& pattern, const ExtBall& ball);

/// Witness that R_pattern embeds in R_host: an induced copy of pattern in a ball
/// of the extension graph.
struct EmbeddingCertificate {
  int radius;
  std::vector<int> injection;  // pattern vertex -> ball vertex index
  std::vector<ExtVertex> images;
};

/// nullopt means "unknown at this radius", not "does not embed".
/// Throws ScopeError("right-angled") or ScopeError("triangle-free") on the host.
std::optional<EmbeddingCertificate> certify_raag_embedding(const DefiningGraph& pattern, const DefiningGraph& host,
                                                           int radius, std::size_t budget = kDefaultBallBudget);

}  // namespace artin
