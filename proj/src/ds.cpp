#include "shaclds/ds.hpp"
#include "shaclds/vocab.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <future>
#include <regex>
#include <set>
#include <sstream>

namespace shaclds {

namespace {

std::vector<Term> read_collection_ds(const Graph& g, const Term& head,
                                     const std::string& context) {
  std::vector<Term> out;
  Term node = head;
  std::set<Term> seen;
  while (!(node == vocab::rdf_nil())) {
    if (!seen.insert(node).second)
      throw DsLoadError("malformed collection (cycle) in " + context);
    auto first = g.match(node, vocab::rdf_first(), std::nullopt);
    auto rest = g.match(node, vocab::rdf_rest(), std::nullopt);
    if (first.size() != 1 || rest.size() != 1)
      throw DsLoadError("malformed collection in " + context);
    out.push_back(first.front().object);
    node = rest.front().object;
  }
  return out;
}

/// Parses combination nodes from the default graph; blank nodes shared
/// across lists resolve to the same subtree.
class CombinationParser {
public:
  explicit CombinationParser(const Graph& defaults) : g_(defaults) {}

  CombinationTree parse(const Term& node) {
    std::set<Term> in_progress;
    return parse_node(node, in_progress);
  }

private:
  const Graph& g_;

  CombinationTree parse_node(const Term& node, std::set<Term>& in_progress) {
    if (!in_progress.insert(node).second)
      throw DsLoadError("combination node cycle at " + node.to_ntriples());

    CombinationTree tree;
    bool have_op = false;
    Term list_head;
    for (const auto& t : g_.match(node, std::nullopt, std::nullopt)) {
      CombinationTree::Op op;
      if (t.predicate == vocab::shds_or()) {
        op = CombinationTree::Op::Or;
      } else if (t.predicate == vocab::shds_and()) {
        op = CombinationTree::Op::And;
      } else if (t.predicate == vocab::shds_minus()) {
        op = CombinationTree::Op::Minus;
      } else if (t.predicate.value().rfind(ns::shds, 0) == 0) {
        throw DsLoadError("unknown operator " + t.predicate.to_ntriples() +
                          " on combination node " + node.to_ntriples());
      } else {
        continue;
      }
      if (have_op)
        throw DsLoadError("combination node " + node.to_ntriples() +
                          " has multiple operators");
      have_op = true;
      tree.op = op;
      list_head = t.object;
    }
    if (!have_op)
      throw DsLoadError("combination node " + node.to_ntriples() +
                        " has no shds:or/shds:and/shds:minus operator");

    auto members = read_collection_ds(g_, list_head,
                                      "combination node " + node.to_ntriples());
    if (members.empty())
      throw DsLoadError("combination node " + node.to_ntriples() +
                        " has an empty operand list");
    for (const auto& m : members) {
      CombinationTree::Operand operand;
      if (m.is_iri()) {
        if (m == vocab::shds_all()) {
          operand.kind = CombinationTree::Operand::Kind::All;
        } else {
          operand.kind = CombinationTree::Operand::Kind::Graph;
          operand.graph = m;
        }
      } else if (m.is_blank()) {
        operand.kind = CombinationTree::Operand::Kind::Tree;
        operand.tree.push_back(parse_node(m, in_progress));
      } else {
        throw DsLoadError("literal operand in combination node " + node.to_ntriples());
      }
      tree.operands.push_back(std::move(operand));
    }
    in_progress.erase(node);
    return tree;
  }
};

std::string canonical_tree(const CombinationTree& tree) {
  std::vector<std::string> parts;
  for (const auto& operand : tree.operands) {
    switch (operand.kind) {
      case CombinationTree::Operand::Kind::Graph:
        parts.push_back("<" + operand.graph.value() + ">");
        break;
      case CombinationTree::Operand::Kind::All:
        parts.push_back("*");
        break;
      case CombinationTree::Operand::Kind::Tree:
        parts.push_back(canonical_tree(operand.tree.front()));
        break;
    }
  }
  const char* name = tree.op == CombinationTree::Op::Or
                         ? "or"
                         : tree.op == CombinationTree::Op::And ? "and" : "minus";
  if (tree.op != CombinationTree::Op::Minus) std::sort(parts.begin(), parts.end());
  std::string out = name;
  out += "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

GraphPtr operand_graph(const CombinationTree::Operand& operand, const Dataset& data);

GraphPtr fold_tree(const CombinationTree& tree, const Dataset& data) {
  auto graphs = [&]() {
    std::vector<GraphPtr> out;
    out.reserve(tree.operands.size());
    for (const auto& operand : tree.operands) out.push_back(operand_graph(operand, data));
    return out;
  }();
  auto result = std::make_shared<Graph>();
  switch (tree.op) {
    case CombinationTree::Op::Or:
      for (const auto& g : graphs) *result = graph_union(*result, *g);
      break;
    case CombinationTree::Op::And: {
      Graph acc = *graphs.front();
      for (std::size_t i = 1; i < graphs.size(); ++i)
        acc = graph_intersection(acc, *graphs[i]);
      *result = std::move(acc);
      break;
    }
    case CombinationTree::Op::Minus: {
      Graph rest;
      for (std::size_t i = 1; i < graphs.size(); ++i) rest = graph_union(rest, *graphs[i]);
      *result = graph_difference(*graphs.front(), rest);
      break;
    }
  }
  return result;
}

GraphPtr operand_graph(const CombinationTree::Operand& operand, const Dataset& data) {
  switch (operand.kind) {
    case CombinationTree::Operand::Kind::Graph:
      if (operand.graph == vocab::shds_default()) return data.default_graph_ptr();
      return data.graph_ptr(operand.graph);
    case CombinationTree::Operand::Kind::All:
      return flatten_all(data);
    case CombinationTree::Operand::Kind::Tree:
      return fold_tree(operand.tree.front(), data);
  }
  return empty_graph();
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Term combination_skolem_iri(const CombinationTree& tree) {
  std::uint64_t h = fnv1a64(canonical_tree(tree));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return Term::iri(std::string("urn:shaclds:combination:") + buf);
}

ShapesDataset load_shapes_dataset(const Dataset& d) {
  ShapesDataset sd;
  const Graph& defaults = d.default_graph();
  CombinationParser combinations(defaults);

  for (const auto& t : defaults.triples()) {
    TargetSpec spec;
    if (t.predicate == vocab::shds_targetGraph()) {
      if (!t.object.is_iri())
        throw DsLoadError("shds:targetGraph value must be an IRI: " +
                          t.object.to_ntriples());
      spec.kind = TargetSpec::Kind::Graph;
      spec.graph = t.object;
    } else if (t.predicate == vocab::shds_targetGraphPattern()) {
      if (!t.object.is_literal())
        throw DsLoadError("shds:targetGraphPattern value must be a literal");
      spec.kind = TargetSpec::Kind::Pattern;
      spec.pattern = t.object.value();
      try {
        std::regex probe(spec.pattern, std::regex::ECMAScript);
      } catch (const std::regex_error& e) {
        throw DsLoadError("target graph pattern \"" + spec.pattern +
                          "\" does not compile: " + e.what());
      }
    } else if (t.predicate == vocab::shds_targetGraphCombination()) {
      spec.kind = TargetSpec::Kind::Combination;
      spec.combination = combinations.parse(t.object);
    } else {
      continue;
    }
    if (!t.subject.is_iri())
      throw DsLoadError("targeting declaration subject must be a shapes graph IRI, got " +
                        t.subject.to_ntriples());
    if (!d.has_named(t.subject))
      throw DsLoadError("declaration references shapes graph " + t.subject.to_ntriples() +
                        " which is not a graph of the shapes dataset");
    sd.declarations.push_back({t.subject, std::move(spec)});
  }

  for (const auto& decl : sd.declarations) {
    const std::string& iri = decl.shapes_graph.value();
    if (sd.shapes_graphs.count(iri)) continue;
    try {
      ShapesLoad loaded = load_shapes(*d.find_named(decl.shapes_graph));
      for (const auto& diag : loaded.diagnostics)
        sd.diagnostics.push_back(iri + ": " + diag);
      sd.shapes_graphs.emplace(iri, std::move(loaded));
    } catch (const ShapeLoadError& e) {
      throw DsLoadError("loading shapes graph " + iri + ": " + e.what());
    }
  }
  return sd;
}

std::vector<FocusEntry> resolve_focus_graphs(const TargetSpec& spec, const Dataset& data) {
  std::vector<FocusEntry> out;
  switch (spec.kind) {
    case TargetSpec::Kind::Graph: {
      GraphPtr g = spec.graph == vocab::shds_default() ? data.default_graph_ptr()
                                                       : data.graph_ptr(spec.graph);
      out.push_back({g, spec.graph});
      break;
    }
    case TargetSpec::Kind::Pattern: {
      std::regex re;
      try {
        re = std::regex(spec.pattern, std::regex::ECMAScript);
      } catch (const std::regex_error& e) {
        throw DsLoadError("target graph pattern \"" + spec.pattern +
                          "\" does not compile: " + e.what());
      }
      for (const auto& [iri, g] : data.named()) {
        if (std::regex_search(iri, re)) out.push_back({g, Term::iri(iri)});
      }
      break;
    }
    case TargetSpec::Kind::Combination: {
      out.push_back({fold_tree(spec.combination, data),
                     combination_skolem_iri(spec.combination)});
      break;
    }
  }
  return out;
}

EvaluationDataset build_evaluation_dataset(const Dataset& data, GraphPtr focus) {
  EvaluationDataset eds;
  eds.focus = std::move(focus);
  for (const auto& [iri, g] : data.named()) eds.named.emplace(iri, g);
  eds.named.emplace(vocab::shds_default().value(), data.default_graph_ptr());
  return eds;
}

GraphPtr flatten(const Dataset& data, const std::vector<Term>& graph_names) {
  auto out = std::make_shared<Graph>();
  for (const auto& name : graph_names) {
    const Graph& g = name == vocab::shds_default() ? data.default_graph()
                                                   : data.graph(name);
    for (const auto& t : g.triples()) out->insert(t);
  }
  return out;
}

GraphPtr flatten_all(const Dataset& data) {
  auto out = std::make_shared<Graph>();
  for (const auto& t : data.default_graph().triples()) out->insert(t);
  for (const auto& [iri, g] : data.named()) {
    for (const auto& t : g->triples()) out->insert(t);
  }
  return out;
}

namespace {

ValidationReport validate_pair(const ShapesLoad& shapes, const ResolvedTarget& pair,
                               const Dataset& data) {
  try {
    EvaluationDataset eds = build_evaluation_dataset(data, pair.focus.graph);
    ValidationReport report = validate_graph(shapes, eds);
    for (auto& r : report.results) {
      r.focus_graph = pair.focus.id;
      r.shapes_graph = pair.shapes_graph;
    }
    return report;
  } catch (const std::exception& e) {
    throw std::runtime_error("validating pair (shapes graph " +
                             pair.shapes_graph.to_ntriples() + ", focus graph " +
                             pair.focus.id.to_ntriples() + "): " + e.what());
  }
}

}  // namespace

std::vector<ResolvedTarget> resolve_declarations(const ShapesDataset& sd,
                                                 const Dataset& data) {
  std::vector<ResolvedTarget> pairs;
  for (const auto& decl : sd.declarations) {
    for (auto& entry : resolve_focus_graphs(decl.spec, data)) {
      pairs.push_back({decl.shapes_graph, std::move(entry)});
    }
  }
  return pairs;
}

ValidationReport validate_resolved(const ShapesDataset& sd, const Dataset& data,
                                   const std::vector<ResolvedTarget>& pairs,
                                   int parallel) {

  // Merge order is (shapes graph IRI, focus graph id); within a pair results
  // are already normalized, so parallel completion order cannot show.
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pairs[a].shapes_graph != pairs[b].shapes_graph)
      return pairs[a].shapes_graph < pairs[b].shapes_graph;
    return pairs[a].focus.id < pairs[b].focus.id;
  });

  auto shapes_of = [&sd](const ResolvedTarget& pair) -> const ShapesLoad& {
    auto it = sd.shapes_graphs.find(pair.shapes_graph.value());
    if (it == sd.shapes_graphs.end())
      throw std::runtime_error("no shapes loaded for graph " +
                               pair.shapes_graph.to_ntriples());
    return it->second;
  };

  std::vector<ValidationReport> partial(pairs.size());
  if (parallel <= 1 || pairs.size() <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      partial[i] = validate_pair(shapes_of(pairs[i]), pairs[i], data);
  } else {
    std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(parallel), pairs.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    std::vector<std::exception_ptr> errors(width);
    for (std::size_t w = 0; w < width; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w]() {
        try {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            partial[i] = validate_pair(shapes_of(pairs[i]), pairs[i], data);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      }));
    }
    for (auto& f : workers) f.get();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ValidationReport merged;
  for (std::size_t i : order) {
    auto& r = partial[i].results;
    merged.results.insert(merged.results.end(), std::make_move_iterator(r.begin()),
                          std::make_move_iterator(r.end()));
  }
  merged.conforms = compute_conforms(merged);
  return merged;
}

ValidationReport validate_dataset(const ShapesDataset& sd, const Dataset& data,
                                  int parallel) {
  return validate_resolved(sd, data, resolve_declarations(sd, data), parallel);
}

}  // namespace shaclds
