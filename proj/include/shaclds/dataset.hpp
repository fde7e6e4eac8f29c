#pragma once

#include "shaclds/graph.hpp"
#include "shaclds/term.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace shaclds {

/// One statement of a dataset; graph absent means the default graph.
struct Quad {
  Term subject;
  Term predicate;
  Term object;
  std::optional<Term> graph;
};

/// An RDF dataset: one default graph plus named graphs keyed by IRI.
/// Graph names are unique by construction; named-graph iteration is ordered
/// by IRI so downstream output is deterministic.
class Dataset {
public:
  Dataset();

  Graph& default_graph() { return *default_; }
  const Graph& default_graph() const { return *default_; }
  GraphPtr default_graph_ptr() const { return default_; }

  /// Named graph for building; created when absent.
  Graph& named_graph(const Term& name);

  bool has_named(const Term& name) const;
  GraphPtr find_named(const Term& name) const;  // nullptr when absent

  /// Named graph when present, default graph when name is absent, empty
  /// graph when the name is unknown.
  const Graph& graph(const std::optional<Term>& name) const;
  GraphPtr graph_ptr(const std::optional<Term>& name) const;

  /// Graph names sorted by IRI.
  std::vector<Term> graph_names() const;
  const std::map<std::string, std::shared_ptr<Graph>>& named() const { return named_; }

  void add(const Quad& q);
  std::size_t named_count() const { return named_.size(); }
  std::size_t total_size() const;

private:
  std::shared_ptr<Graph> default_;
  std::map<std::string, std::shared_ptr<Graph>> named_;
};

/// The per-(shapes graph, focus graph) view validated by the dataset engine:
/// the focus graph plays the default graph; every named graph of the source
/// dataset stays reachable, and the source default graph is reachable as
/// shds:default. A plain single-graph view has no named graphs at all.
struct EvaluationDataset {
  GraphPtr focus;
  std::map<std::string, GraphPtr> named;

  const Graph& default_graph() const { return *focus; }
  const Graph& graph(const std::string& iri) const;
  GraphPtr graph_ptr(const std::string& iri) const;
  std::vector<Term> graph_names() const;  // sorted by IRI
  std::size_t total_size() const;

  /// View over one lone graph (plain SHACL validation).
  static EvaluationDataset single(GraphPtr g);
};

}  // namespace shaclds
