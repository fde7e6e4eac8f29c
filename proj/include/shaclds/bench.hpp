#pragma once

#include "shaclds/dataset.hpp"
#include "shaclds/ds.hpp"
#include "shaclds/shapes.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shaclds {

class BenchConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Synthetic ERA-style dataset generator configuration. Violation kinds:
/// pattern, maxcount, datatype, skos, class (counts per operator graph).
struct GeneratorConfig {
  std::uint64_t seed = 1;
  int operator_count = 3;
  int triples_per_operator = 40;
  std::map<std::string, int> violations{{"pattern", 1}};
  int shared_triple_count = 0;  // violating triples duplicated across operator pairs
  bool divergence_missing_reference = false;
  bool divergence_conflicting_values = false;
  bool divergence_spoof = false;
  bool full_extras = false;  // duplicate-version ontology/skos, shacl, metadata graphs

  void validate() const;  // throws BenchConfigError
};

/// Expected violation counts per view, recorded at construction time.
/// Maps are keyed by plain IRI strings.
struct GroundTruth {
  // per-operator views: focus/operator graph IRI → shape IRI → count
  std::map<std::string, std::map<std::string, std::size_t>> target_by_graph;
  std::map<std::string, std::map<std::string, std::size_t>> combo_by_graph;
  std::map<std::string, std::size_t> baseline_by_shape;
  std::map<std::string, std::size_t> full_by_shape;
  // reference-category graphs validated by the extra shapes graphs
  std::map<std::string, std::map<std::string, std::size_t>> extra_by_graph;

  std::map<std::string, std::size_t> target_by_shape() const;
  std::map<std::string, std::size_t> combo_by_shape() const;
  std::size_t target_total() const;
  std::size_t combo_total() const;
  std::size_t baseline_total() const;
  std::size_t full_total() const;
  std::size_t extra_total() const;

  std::string to_json() const;
  static GroundTruth from_json(const std::string& text);
};

struct GeneratedBench {
  Dataset data;
  GroundTruth truth;
  std::vector<std::string> operator_graphs;  // sorted operator graph IRIs
};

/// Deterministic: the same config yields byte-identical serializations.
GeneratedBench generate(const GeneratorConfig& config);

/// Namespace prefixes used by generated documents and fixtures.
std::map<std::string, std::string> era_prefixes();

enum class Strategy { Target, Combination };

/// Shapes artifacts mirroring the ERA migration: the flat shapes graph
/// (Turtle) and the two shapes-dataset flavors (TriG). The Target flavor
/// carries GRAPH-pinned rewrites of the cross-graph constraints; the
/// Combination flavor declares one or() per operator graph. `extra` adds the
/// ontology/skos/shacl shapes graphs with their pattern declarations.
std::string era_flat_shapes_turtle();
std::string era_shapes_dataset_trig(Strategy strategy, bool extra,
                                    const std::vector<std::string>& operator_graph_iris);

/// Graph names merged by the SHACL baseline: operator graphs plus the four
/// main reference graphs.
std::vector<Term> baseline_graph_names(const std::vector<std::string>& operator_graph_iris);

// --- benchmark runner ---

enum class BenchConfigId {
  ShaclBaseline,
  ShaclFull,
  DsTarget,
  DsTargetExtra,
  DsCombo,
  DsComboExtra
};

std::string to_string(BenchConfigId id);
BenchConfigId bench_config_from_string(const std::string& name);

struct RunRecord {
  BenchConfigId config;
  double creation_s = 0.0;
  double validation_s = 0.0;
  std::size_t errors = 0;
};

struct RunOptions {
  int repeats = 10;
  bool warmup = true;  // one unrecorded warm-up run
  int parallel = 1;
};

/// ds-* configurations (shapes dataset input).
std::vector<RunRecord> run_config(BenchConfigId id, const Dataset& data,
                                  const ShapesDataset& sd, const RunOptions& opts);

/// shacl-baseline / shacl-full (flat shapes over a merged graph).
std::vector<RunRecord> run_config(BenchConfigId id, const Dataset& data,
                                  const ShapesLoad& flat_shapes,
                                  const std::vector<Term>& merge_names,
                                  const RunOptions& opts);

/// True when any SPARQL constraint of the shapes dataset uses a GRAPH
/// clause; a Target-Strategy dataset without rewrites is flagged by callers.
bool shapes_dataset_has_graph_rewrites(const ShapesDataset& sd);

struct SummaryRow {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

/// Six-number summary; quartiles by linear interpolation between closest
/// ranks: h = (n-1)p, q = x[⌊h⌋] + (h-⌊h⌋)·(x[⌊h⌋+1] - x[⌊h⌋]).
SummaryRow summarize(std::vector<double> values);

/// Validation-time summary per configuration present in the records.
std::map<BenchConfigId, SummaryRow> summarize_runs(const std::vector<RunRecord>& runs);

// --- config files (key = value lines, # comments) ---

struct BenchFileConfig {
  GeneratorConfig generator;
  std::string data_file;  // optional: load a user dump instead of generating
  int repeats = 10;
  bool warmup = true;
  int parallel = 1;
  std::vector<BenchConfigId> configs;  // default: all six
};

GeneratorConfig parse_generator_config(const std::string& text);
BenchFileConfig parse_bench_config(const std::string& text);

}  // namespace shaclds
