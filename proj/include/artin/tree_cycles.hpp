#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/defining_graph.hpp"
#include "artin/rational.hpp"

namespace artin {

/// Label of an intersection vertex T_i cap T_{i+1}: 2 (SMALL) or >= 3 (BIG).
/// Ordered SMALL < BIG for canonical forms.
enum class Mark : unsigned char { Small = 0, Big = 1 };

/// Abstract boundary pattern of a cycle of standard trees: the cyclic sequence of
/// the k intersection-vertex marks. Always stored in canonical form (least under
/// rotation and reflection).
class TreeCycleConfig {
 public:
  /// Throws std::invalid_argument when fewer than 3 marks are given.
  explicit TreeCycleConfig(std::vector<Mark> marks, bool simple = true);

  /// Parses "SSBS" or "k=4 marks=SSBS".
  static TreeCycleConfig parse(std::string_view text);

  int k() const { return static_cast<int>(marks_.size()); }
  const std::vector<Mark>& marks() const { return marks_; }
  bool simple() const { return simple_; }
  int big_count() const;
  int small_count() const { return k() - big_count(); }

  /// "k=K marks=SSBS..."
  std::string to_string() const;
  std::string marks_string() const;

  friend bool operator==(const TreeCycleConfig&, const TreeCycleConfig&) = default;
  friend auto operator<=>(const TreeCycleConfig& a, const TreeCycleConfig& b) {
    if (auto c = a.k() <=> b.k(); c != 0) return c;
    return a.marks_ <=> b.marks_;
  }

 private:
  std::vector<Mark> marks_;
  bool simple_ = true;
};

/// Least rotation/reflection of a cyclic mark sequence.
std::vector<Mark> canonical_necklace(const std::vector<Mark>& marks);

/// k + number of BIG marks.
int config_wg(const TreeCycleConfig& c);

/// Every canonical simple configuration with config_wg == w, sorted.
std::vector<TreeCycleConfig> enumerate_simple_configs(int w);

/// Non-simple trace shaped like a figure eight: two simple lobes meeting at a
/// crossing vertex w, which lies on the two trees the lobes share. Each lobe is a
/// TreeCycleConfig whose marks are the open path between the shared trees
/// followed by the gluing mark.
class WedgeConfig {
 public:
  /// `first_path` / `second_path`: marks along each lobe strictly between the
  /// shared trees (a lobe of k trees has k-1 of them). Throws std::invalid_argument
  /// when a lobe would have fewer than 3 trees.
  WedgeConfig(std::vector<Mark> first_path, std::vector<Mark> second_path, Mark gluing);

  const std::vector<Mark>& first_path() const { return first_; }
  const std::vector<Mark>& second_path() const { return second_; }
  Mark gluing() const { return gluing_; }

  /// Distinct trees of the trace: k1 + k2 - 2.
  int tree_count() const;
  /// The two lobes as simple configurations (path marks plus the gluing mark).
  TreeCycleConfig first() const;
  TreeCycleConfig second() const;

  /// "wedge trees=N lobes=SB|SS glue=B"
  std::string to_string() const;

  friend bool operator==(const WedgeConfig&, const WedgeConfig&) = default;
  friend auto operator<=>(const WedgeConfig&, const WedgeConfig&) = default;

 private:
  std::vector<Mark> first_;
  std::vector<Mark> second_;
  Mark gluing_;
};

/// Weighted girth of the full trace: tree count plus BIG marks on the trace's own
/// intersection vertices (the crossing vertex is not one of them).
int wedge_wg(const WedgeConfig& c);

/// Canonical wedges of weighted girth w that are not already settled by a smaller
/// case: some lobe has weighted girth < w, and no lobe is the all-SMALL triangle.
std::vector<WedgeConfig> enumerate_wedge_configs(int w);

enum class Metric { Simplicial, Cubical };

/// Coarse Gauss-Bonnet budget for the boundary of a filling diagram.
/// Every value is in units of pi. An empty type0_cap means minus infinity
/// (there is no cycle to produce a type-0 vertex at all).
struct ClassBudget {
  Rational small_cap{1, 2};
  Rational big_cap{1};
  std::optional<Rational> type0_cap;
};

struct BudgetVerdict {
  bool feasible = true;
  std::optional<Rational> lhs;  // empty when type0_cap is minus infinity
  std::string certificate;      // the evaluated inequality with exact rationals
};

/// Infeasible iff #SMALL * small_cap + #BIG * big_cap + type0_cap < 2. Feasible only
/// means "not excluded by this inequality". Throws std::invalid_argument if
/// type0_cap >= 2.
BudgetVerdict budget_check(const TreeCycleConfig& c, const ClassBudget& b);

/// Budget whose type-0 cap is the largest type-0 bound over induced cycles of g of
/// length <= 6, together with the uniform -1 bound when a longer induced cycle exists.
/// Simplicial requires g two-dimensional; cubical also requires girth >= 4.
ClassBudget class_budget_from_graph(const DefiningGraph& g, Metric metric);

struct LowerBoundReport {
  ExtendedLength length_bound;
  std::optional<ExtendedLength> wg_bound;
  std::string wg_omitted_reason;  // set when wg_bound is empty
};

/// Lower bounds on the length and weighted girth of any cycle of standard trees.
/// Throws ScopeError("two-dimensional") when g is not two-dimensional.
LowerBoundReport lower_bound_report(const DefiningGraph& g);

}  // namespace artin
