#pragma once

#include "shaclds/dataset.hpp"
#include "shaclds/report.hpp"
#include "shaclds/shapes.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace shaclds {

class DsLoadError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Set-algebra tree over graph names. or/and fold n-ary; minus folds as the
/// first operand minus the union of the rest. shds:all stands for the union
/// of every graph of the data dataset (named graphs plus default graph);
/// shds:default names the data default graph.
struct CombinationTree {
  enum class Op { Or, And, Minus } op = Op::Or;

  struct Operand {
    enum class Kind { Graph, All, Tree } kind = Kind::Graph;
    Term graph;                          // Kind::Graph
    std::vector<CombinationTree> tree;   // Kind::Tree, exactly one entry
  };
  std::vector<Operand> operands;
};

struct TargetSpec {
  enum class Kind { Graph, Pattern, Combination } kind = Kind::Graph;
  Term graph;
  std::string pattern;
  CombinationTree combination;
};

struct Declaration {
  Term shapes_graph;
  TargetSpec spec;
};

/// A shapes dataset: targeting declarations from the default graph plus the
/// shapes of each named shapes graph.
struct ShapesDataset {
  std::vector<Declaration> declarations;
  std::map<std::string, ShapesLoad> shapes_graphs;
  std::vector<std::string> diagnostics;
};

/// Read declarations (shds:targetGraph / shds:targetGraphPattern /
/// shds:targetGraphCombination) from the default graph and load every shapes
/// graph. Shared blank combination nodes resolve to one tree; errors: a
/// declaration naming an absent shapes graph, malformed collections, unknown
/// or multiple operators, combination-node cycles.
ShapesDataset load_shapes_dataset(const Dataset& d);

struct FocusEntry {
  GraphPtr graph;
  Term id;
};

/// Resolve a target spec against the data dataset:
///   graph(iri)   → that named graph (shds:default → the default graph)
///   pattern      → one entry per named graph whose IRI matches the regex
///   combination  → exactly one entry, id = skolem IRI of the canonical tree
std::vector<FocusEntry> resolve_focus_graphs(const TargetSpec& spec, const Dataset& data);

/// Skolem IRI naming a combined focus graph; stable across runs and
/// order-independent for or/and operands.
Term combination_skolem_iri(const CombinationTree& tree);

EvaluationDataset build_evaluation_dataset(const Dataset& data, GraphPtr focus);

/// One (shapes graph, focus graph) work item.
struct ResolvedTarget {
  Term shapes_graph;
  FocusEntry focus;
};

/// Resolve every declaration; combination focus graphs are materialized here.
std::vector<ResolvedTarget> resolve_declarations(const ShapesDataset& sd,
                                                 const Dataset& data);

/// Validate pre-resolved pairs; results annotated and merged deterministically
/// by (shapes graph IRI, focus graph id), pair-internal order normalized.
ValidationReport validate_resolved(const ShapesDataset& sd, const Dataset& data,
                                   const std::vector<ResolvedTarget>& pairs,
                                   int parallel = 1);

/// Full SHACL-DS run: for every declaration and resolved focus graph,
/// validate with that shapes graph over the evaluation dataset and annotate
/// results with shds:focusGraph / shds:sourceShapeGraph. Pairs may run in
/// parallel; the merged report is deterministic.
ValidationReport validate_dataset(const ShapesDataset& sd, const Dataset& data,
                                  int parallel = 1);

/// Union of the selected named graphs.
GraphPtr flatten(const Dataset& data, const std::vector<Term>& graph_names);

/// Union of every named graph plus the default graph.
GraphPtr flatten_all(const Dataset& data);

}  // namespace shaclds
