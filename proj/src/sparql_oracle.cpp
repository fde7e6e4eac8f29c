#include "shaclds/sparql.hpp"
#include "shaclds/vocab.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shaclds {

namespace {

// Reference evaluator: enumerates candidate bindings by brute force and
// checks patterns directly against the graphs. Deliberately index-free.

void add_graph_terms(const Graph& g, std::set<Term>& out) {
  for (const auto& t : g.triples()) {
    out.insert(t.subject);
    out.insert(t.predicate);
    out.insert(t.object);
  }
}

std::vector<Term> candidate_terms(const EvaluationDataset& eds) {
  std::set<Term> terms;
  add_graph_terms(eds.default_graph(), terms);
  for (const auto& [iri, g] : eds.named) {
    terms.insert(Term::iri(iri));
    add_graph_terms(*g, terms);
  }
  return {terms.begin(), terms.end()};
}

bool scan_contains(const Graph& g, const Term& s, const Term& p, const Term& o) {
  for (const auto& t : g.triples()) {
    if (t.subject == s && t.predicate == p && t.object == o) return true;
  }
  return false;
}

bool compatible_merge(Binding& into, const Binding& from) {
  for (const auto& [var, term] : from) {
    auto it = into.find(var);
    if (it != into.end()) {
      if (!(it->second == term)) return false;
    } else {
      into.emplace(var, term);
    }
  }
  return true;
}

Expr substitute_expr(const Expr& e, const Binding& mu) {
  Expr out = e;
  if (e.kind == Expr::Kind::Variable) {
    auto it = mu.find(e.var);
    if (it != mu.end()) {
      out.kind = Expr::Kind::Constant;
      out.constant = it->second;
      out.var.clear();
    }
    return out;
  }
  if (e.kind == Expr::Kind::Bound) {
    if (mu.find(e.var) != mu.end()) {
      out.kind = Expr::Kind::Constant;
      out.constant = Term::literal("true", vocab::xsd_boolean().value());
      out.var.clear();
    }
    return out;
  }
  for (auto& a : out.args) a = substitute_expr(a, mu);
  return out;
}

AlgebraNode substitute(const AlgebraNode& node, const Binding& mu) {
  AlgebraNode out = node;
  auto subst_slot = [&mu](PatternSlot& s) {
    if (!s.is_var) return;
    auto it = mu.find(s.var);
    if (it != mu.end()) {
      s.is_var = false;
      s.term = it->second;
      s.var.clear();
    }
  };
  for (auto& p : out.patterns) {
    subst_slot(p.subject);
    subst_slot(p.predicate);
    subst_slot(p.object);
  }
  if (out.kind == AlgebraNode::Kind::Graph && out.graph_is_var) {
    auto it = mu.find(out.graph_var);
    if (it != mu.end()) {
      out.graph_is_var = false;
      out.graph_name = it->second;
      out.graph_var.clear();
    }
  }
  out.expr = substitute_expr(out.expr, mu);
  for (auto& c : out.children) c = substitute(c, mu);
  return out;
}

class Oracle {
public:
  explicit Oracle(const EvaluationDataset& eds)
      : eds_(eds), candidates_(candidate_terms(eds)) {}

  SolutionSequence eval(const AlgebraNode& n, const Graph& active) {
    switch (n.kind) {
      case AlgebraNode::Kind::Bgp:
        return eval_bgp(n.patterns, active);
      case AlgebraNode::Kind::Join: {
        SolutionSequence left = eval(n.children[0], active);
        SolutionSequence right = eval(n.children[1], active);
        SolutionSequence out;
        for (const auto& a : left) {
          for (const auto& b : right) {
            Binding merged = a;
            if (compatible_merge(merged, b)) out.push_back(std::move(merged));
          }
        }
        return out;
      }
      case AlgebraNode::Kind::Union: {
        SolutionSequence out = eval(n.children[0], active);
        SolutionSequence right = eval(n.children[1], active);
        out.insert(out.end(), right.begin(), right.end());
        return out;
      }
      case AlgebraNode::Kind::Graph: {
        if (!n.graph_is_var)
          return eval(n.children[0], eds_.graph(n.graph_name.value()));
        SolutionSequence out;
        for (const auto& [iri, g] : eds_.named) {
          Term name = Term::iri(iri);
          for (const auto& mu : eval(n.children[0], *g)) {
            Binding merged = mu;
            Binding graph_binding{{n.graph_var, name}};
            if (compatible_merge(merged, graph_binding))
              out.push_back(std::move(merged));
          }
        }
        return out;
      }
      case AlgebraNode::Kind::Filter: {
        SolutionSequence out;
        for (auto& mu : eval(n.children[0], active)) {
          auto v = evaluate_expression(n.expr, mu);
          if (!v) continue;
          auto ebv = effective_boolean_value(*v);
          if (ebv && *ebv) out.push_back(std::move(mu));
        }
        return out;
      }
      case AlgebraNode::Kind::FilterExists:
      case AlgebraNode::Kind::FilterNotExists: {
        bool want = n.kind == AlgebraNode::Kind::FilterExists;
        SolutionSequence out;
        for (auto& mu : eval(n.children[0], active)) {
          AlgebraNode inner = substitute(n.children[1], mu);
          bool exists = !eval(inner, active).empty();
          if (exists == want) out.push_back(std::move(mu));
        }
        return out;
      }
    }
    return {};
  }

private:
  const EvaluationDataset& eds_;
  std::vector<Term> candidates_;

  SolutionSequence eval_bgp(const std::vector<TriplePattern>& patterns,
                            const Graph& active) {
    std::vector<std::string> vars;
    for (const auto& p : patterns) {
      for (const PatternSlot* s : {&p.subject, &p.predicate, &p.object}) {
        if (s->is_var && std::find(vars.begin(), vars.end(), s->var) == vars.end())
          vars.push_back(s->var);
      }
    }
    std::sort(vars.begin(), vars.end());
    SolutionSequence out;
    Binding assignment;
    enumerate(patterns, active, vars, 0, assignment, out);
    return out;
  }

  void enumerate(const std::vector<TriplePattern>& patterns, const Graph& active,
                 const std::vector<std::string>& vars, std::size_t i,
                 Binding& assignment, SolutionSequence& out) {
    if (i == vars.size()) {
      if (check_all(patterns, active, assignment)) out.push_back(assignment);
      return;
    }
    for (const auto& term : candidates_) {
      assignment[vars[i]] = term;
      enumerate(patterns, active, vars, i + 1, assignment, out);
    }
    assignment.erase(vars[i]);
  }

  bool check_all(const std::vector<TriplePattern>& patterns, const Graph& active,
                 const Binding& assignment) const {
    for (const auto& p : patterns) {
      Term s = resolve(p.subject, assignment);
      Term pr = resolve(p.predicate, assignment);
      Term o = resolve(p.object, assignment);
      if (!scan_contains(active, s, pr, o)) return false;
    }
    return true;
  }

  static Term resolve(const PatternSlot& slot, const Binding& assignment) {
    if (!slot.is_var) return slot.term;
    return assignment.at(slot.var);
  }
};

}  // namespace

SolutionSequence evaluate_oracle(const QueryAlgebra& query,
                                 const EvaluationDataset& eds,
                                 const Binding& pre_bound) {
  if (eds.total_size() > 10000)
    throw std::invalid_argument("evaluation dataset exceeds the oracle size limit");
  for (const auto& [var, term] : pre_bound) {
    if (var != "this")
      throw std::invalid_argument("pre-binding may bind only $this, got ?" + var);
  }
  Oracle oracle(eds);
  AlgebraNode pattern = substitute(query.pattern, pre_bound);
  SolutionSequence raw = oracle.eval(pattern, eds.default_graph());
  SolutionSequence seeded;
  for (const auto& mu : raw) {
    Binding merged = mu;
    if (compatible_merge(merged, pre_bound)) seeded.push_back(std::move(merged));
  }
  return project_solutions(query, seeded);
}

}  // namespace shaclds
