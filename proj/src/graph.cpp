#include "shaclds/graph.hpp"

#include <algorithm>

namespace shaclds {

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  std::size_t h = subject.hash();
  h = h * 1099511628211ULL + predicate.hash();
  h = h * 1099511628211ULL + object.hash();
  hash = h;
}

bool Graph::insert(Triple t) {
  if (index_.find(t) != index_.end()) return false;
  auto id = static_cast<std::uint32_t>(triples_.size());
  by_subject_[t.subject].push_back(id);
  by_predicate_[t.predicate].push_back(id);
  by_object_[t.object].push_back(id);
  index_.emplace(t, id);
  triples_.push_back(std::move(t));
  return true;
}

const std::vector<std::uint32_t>* Graph::candidates(
    const std::optional<Term>& s, const std::optional<Term>& p,
    const std::optional<Term>& o, bool& miss) const {
  miss = false;
  const std::vector<std::uint32_t>* best = nullptr;
  auto consider = [&](const std::unordered_map<Term, std::vector<std::uint32_t>, TermHash>& idx,
                      const std::optional<Term>& key) {
    if (!key) return;
    auto it = idx.find(*key);
    if (it == idx.end()) {
      miss = true;
      return;
    }
    if (!best || it->second.size() < best->size()) best = &it->second;
  };
  consider(by_subject_, s);
  if (miss) return nullptr;
  consider(by_predicate_, p);
  if (miss) return nullptr;
  consider(by_object_, o);
  if (miss) return nullptr;
  return best;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s,
                                 const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  bool miss = false;
  const auto* cand = candidates(s, p, o, miss);
  if (miss) return out;
  auto keep = [&](const Triple& t) {
    return (!s || t.subject == *s) && (!p || t.predicate == *p) &&
           (!o || t.object == *o);
  };
  if (!cand) {
    out = triples_;
    return out;
  }
  for (auto id : *cand) {
    const Triple& t = triples_[id];
    if (keep(t)) out.push_back(t);
  }
  return out;
}

bool Graph::any(const std::optional<Term>& s, const std::optional<Term>& p,
                const std::optional<Term>& o) const {
  bool miss = false;
  const auto* cand = candidates(s, p, o, miss);
  if (miss) return false;
  auto keep = [&](const Triple& t) {
    return (!s || t.subject == *s) && (!p || t.predicate == *p) &&
           (!o || t.object == *o);
  };
  if (!cand) return !triples_.empty();
  for (auto id : *cand) {
    if (keep(triples_[id])) return true;
  }
  return false;
}

const GraphPtr& empty_graph() {
  static const GraphPtr g = std::make_shared<Graph>();
  return g;
}

Graph graph_union(const Graph& a, const Graph& b) {
  Graph out;
  for (const auto& t : a.triples()) out.insert(t);
  for (const auto& t : b.triples()) out.insert(t);
  return out;
}

Graph graph_intersection(const Graph& a, const Graph& b) {
  Graph out;
  const Graph& small = a.size() <= b.size() ? a : b;
  const Graph& large = a.size() <= b.size() ? b : a;
  for (const auto& t : small.triples()) {
    if (large.contains(t)) out.insert(t);
  }
  return out;
}

Graph graph_difference(const Graph& a, const Graph& b) {
  Graph out;
  for (const auto& t : a.triples()) {
    if (!b.contains(t)) out.insert(t);
  }
  return out;
}

}  // namespace shaclds
