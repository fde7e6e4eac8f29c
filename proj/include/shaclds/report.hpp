#pragma once

#include "shaclds/graph.hpp"
#include "shaclds/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shaclds {

/// A single SHACL validation result, optionally annotated with the
/// dataset-level provenance pair (focus graph, source shapes graph).
struct ValidationResult {
  Term focus;
  std::optional<Term> path;
  std::optional<Term> value;
  Term source_shape;
  Term component;
  Term severity;
  std::optional<Term> message;
  std::optional<Term> focus_graph;
  std::optional<Term> shapes_graph;

  friend bool operator==(const ValidationResult& a, const ValidationResult& b) {
    return a.focus == b.focus && a.path == b.path && a.value == b.value &&
           a.source_shape == b.source_shape && a.component == b.component &&
           a.severity == b.severity && a.message == b.message &&
           a.focus_graph == b.focus_graph && a.shapes_graph == b.shapes_graph;
  }
};

struct ValidationReport {
  bool conforms = true;
  std::vector<ValidationResult> results;
};

/// Sort results into the canonical report order: (focus graph, source shape,
/// focus node, path, value), remaining fields as tiebreakers.
void normalize_report(ValidationReport& report);

/// conforms ⇔ no result carries severity sh:Violation.
bool compute_conforms(const ValidationReport& report);

/// Deterministic Turtle serialization of a report (normalized order,
/// sh:/shds:/xsd:/rdf: prefix block).
std::string serialize_report(const ValidationReport& report);

/// Reconstruct a report from a parsed report graph.
ValidationReport report_from_graph(const Graph& g);

}  // namespace shaclds
