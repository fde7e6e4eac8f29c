#pragma once

#include "shaclds/term.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace shaclds {

struct Triple {
  Term subject;
  Term predicate;
  Term object;
  std::size_t hash = 0;

  Triple() = default;
  Triple(Term s, Term p, Term o);

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.hash == b.hash && a.subject == b.subject &&
           a.predicate == b.predicate && a.object == b.object;
  }
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.subject <=> b.subject; c != 0) return c;
    if (auto c = a.predicate <=> b.predicate; c != 0) return c;
    return a.object <=> b.object;
  }
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const { return t.hash; }
};

/// A set of triples with single-key lookup indexes on subject, predicate and
/// object. Insertion order is preserved (triples()); set semantics apply.
/// Graphs are mutated only while being built and are shared read-only after.
class Graph {
public:
  Graph() = default;

  /// Returns true when the triple was new.
  bool insert(Triple t);
  bool insert(Term s, Term p, Term o) { return insert(Triple(std::move(s), std::move(p), std::move(o))); }

  bool contains(const Triple& t) const { return index_.find(t) != index_.end(); }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  /// All triples in insertion order.
  const std::vector<Triple>& triples() const { return triples_; }

  /// Triples matching the bound positions; absent positions are wildcards.
  /// Uses the most selective single-key index available.
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  /// match() restricted to existence.
  bool any(const std::optional<Term>& s, const std::optional<Term>& p,
           const std::optional<Term>& o) const;

private:
  std::vector<Triple> triples_;
  std::unordered_map<Triple, std::uint32_t, TripleHash> index_;
  std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> by_subject_;
  std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> by_predicate_;
  std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> by_object_;

  const std::vector<std::uint32_t>* candidates(
      const std::optional<Term>& s, const std::optional<Term>& p,
      const std::optional<Term>& o, bool& miss) const;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Shared empty graph singleton (unknown graph names resolve to it).
const GraphPtr& empty_graph();

Graph graph_union(const Graph& a, const Graph& b);
Graph graph_intersection(const Graph& a, const Graph& b);
Graph graph_difference(const Graph& a, const Graph& b);

}  // namespace shaclds
