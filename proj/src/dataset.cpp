#include "shaclds/dataset.hpp"

namespace shaclds {

Dataset::Dataset() : default_(std::make_shared<Graph>()) {}

Graph& Dataset::named_graph(const Term& name) {
  auto it = named_.find(name.value());
  if (it == named_.end()) {
    it = named_.emplace(name.value(), std::make_shared<Graph>()).first;
  }
  return *it->second;
}

bool Dataset::has_named(const Term& name) const {
  return named_.find(name.value()) != named_.end();
}

GraphPtr Dataset::find_named(const Term& name) const {
  auto it = named_.find(name.value());
  return it == named_.end() ? nullptr : GraphPtr(it->second);
}

const Graph& Dataset::graph(const std::optional<Term>& name) const {
  return *graph_ptr(name);
}

GraphPtr Dataset::graph_ptr(const std::optional<Term>& name) const {
  if (!name) return default_;
  auto it = named_.find(name->value());
  if (it == named_.end()) return empty_graph();
  return it->second;
}

std::vector<Term> Dataset::graph_names() const {
  std::vector<Term> out;
  out.reserve(named_.size());
  for (const auto& [iri, g] : named_) out.push_back(Term::iri(iri));
  return out;
}

void Dataset::add(const Quad& q) {
  Triple t(q.subject, q.predicate, q.object);
  if (q.graph) {
    named_graph(*q.graph).insert(std::move(t));
  } else {
    default_->insert(std::move(t));
  }
}

std::size_t Dataset::total_size() const {
  std::size_t n = default_->size();
  for (const auto& [iri, g] : named_) n += g->size();
  return n;
}

const Graph& EvaluationDataset::graph(const std::string& iri) const {
  return *graph_ptr(iri);
}

GraphPtr EvaluationDataset::graph_ptr(const std::string& iri) const {
  auto it = named.find(iri);
  if (it == named.end()) return empty_graph();
  return it->second;
}

std::vector<Term> EvaluationDataset::graph_names() const {
  std::vector<Term> out;
  out.reserve(named.size());
  for (const auto& [iri, g] : named) out.push_back(Term::iri(iri));
  return out;
}

std::size_t EvaluationDataset::total_size() const {
  std::size_t n = focus ? focus->size() : 0;
  for (const auto& [iri, g] : named) n += g->size();
  return n;
}

EvaluationDataset EvaluationDataset::single(GraphPtr g) {
  EvaluationDataset eds;
  eds.focus = std::move(g);
  return eds;
}

}  // namespace shaclds
