#pragma once

#include "shaclds/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace shaclds {

/// Key under which results are considered duplicates: every standard result
/// field, never the shds: provenance pair, so per-operator repeats collapse.
/// Absent optional fields participate as an explicit marker.
std::string dedup_key(const ValidationResult& r);

struct DedupOutcome {
  ValidationReport report;
  std::size_t removed = 0;
};

/// Keep the first result per dedup key in normalized report order.
DedupOutcome dedup(const ValidationReport& report);

struct ShapeCountTable {
  std::map<std::string, std::size_t> by_shape;        // sourceShape (N-Triples form)
  std::map<std::string, std::size_t> by_focus_graph;  // shds:focusGraph, when present
  std::size_t total = 0;
  std::size_t deduped_total = 0;
};

ShapeCountTable group_counts(const ValidationReport& report);

struct CountDiff {
  std::string shape;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
};

/// Shapes whose counts differ, largest |delta| first (positive before
/// negative on ties, then shape).
std::vector<CountDiff> diff_counts(const ShapeCountTable& a, const ShapeCountTable& b);

/// Aligned text rendering of a count table.
std::string render_counts_text(const ShapeCountTable& table);

/// Machine-readable form: header "shape,count", one row per shape.
std::string render_counts_csv(const ShapeCountTable& table);

}  // namespace shaclds
