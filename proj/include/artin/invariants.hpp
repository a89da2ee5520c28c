#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/classification.hpp"
#include "artin/defining_graph.hpp"
#include "artin/tree_cycles.hpp"

namespace artin {

/// Whether some vertex disconnects its component when removed. For disconnected
/// input the answer is OR-ed over components.
bool separating_vertex_exists(const DefiningGraph& g);

/// Articulation points in ascending order.
std::vector<int> separating_vertices(const DefiningGraph& g);

enum class Scope { Proven, Informational };

/// A reported value with the result it rests on.
struct ReportField {
  std::string name;
  std::string value;
  Scope scope = Scope::Informational;
  std::string basis;  // theorem or citation for PROVEN fields, otherwise why not
};

struct InvariantReport {
  std::string source;  // file name, or empty
  std::string hash;
  int components = 0;
  int vertex_count = 0;
  int edge_count = 0;
  ExtendedLength girth;
  ExtendedLength weighted_girth;
  int abelianization_rank = 0;
  int odd_class_count = 0;
  ClassReport classes;
  int leaf_count = 0;
  bool separating_vertex = false;
  std::vector<int> big_labels;  // distinct labels >= 3, ascending
  bool labelled_cycle = false;
  std::optional<ExtendedLength> commutation_girth;
  std::string commutation_girth_skipped;  // failed hypothesis when absent
  std::optional<LowerBoundReport> lower_bounds;
  std::string lower_bounds_skipped;

  bool two_dimensional_hyperbolic() const {
    return classes.two_dimensional && classes.hyperbolic_type.value_or(false);
  }
  /// Every field with its scope tag, in a fixed order.
  std::vector<ReportField> fields() const;
};

InvariantReport report(const DefiningGraph& g, std::string source = {});

/// Whether g is a single cycle (connected, 2-regular, >= 3 vertices).
bool is_labelled_cycle(const DefiningGraph& g);

struct AgreedInvariant {
  std::string name;
  std::string value;
};

struct SkippedInvariant {
  std::string name;
  std::string hypothesis;  // the hypothesis that failed, verbatim
  std::string detail;
};

struct ComparisonVerdict {
  enum class Kind { Distinguished, GroupsIsomorphic, Inconclusive };
  Kind kind = Kind::Inconclusive;

  // Distinguished
  std::string invariant;
  std::string first_value;
  std::string second_value;
  std::string citation;

  // GroupsIsomorphic: vertex map first -> second
  std::vector<int> isomorphism;

  std::vector<AgreedInvariant> agreeing;
  std::vector<SkippedInvariant> skipped;

  std::string kind_name() const;
};

/// Applies, in a fixed order, every invariant whose proven scope covers both
/// inputs and reports the first that differs.
ComparisonVerdict compare(const DefiningGraph& g, const DefiningGraph& h);
ComparisonVerdict compare(const DefiningGraph& g, const InvariantReport& rg, const DefiningGraph& h,
                          const InvariantReport& rh);

}  // namespace artin
