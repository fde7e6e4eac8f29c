#include "shaclds/sparql.hpp"
#include "shaclds/vocab.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <stdexcept>

namespace shaclds {

namespace {

// --- numeric comparison over integer/decimal lexical forms ---

struct DecimalParts {
  bool negative = false;
  std::string int_part;   // leading zeros stripped; "0" when zero
  std::string frac_part;  // trailing zeros stripped
};

std::optional<DecimalParts> parse_decimal(const std::string& lex) {
  DecimalParts d;
  std::size_t i = 0;
  if (i < lex.size() && (lex[i] == '+' || lex[i] == '-')) {
    d.negative = lex[i] == '-';
    ++i;
  }
  std::string ip, fp;
  while (i < lex.size() && std::isdigit(static_cast<unsigned char>(lex[i]))) ip += lex[i++];
  if (i < lex.size() && lex[i] == '.') {
    ++i;
    while (i < lex.size() && std::isdigit(static_cast<unsigned char>(lex[i]))) fp += lex[i++];
  }
  if (i != lex.size() || (ip.empty() && fp.empty())) return std::nullopt;
  std::size_t nz = ip.find_first_not_of('0');
  d.int_part = nz == std::string::npos ? "0" : ip.substr(nz);
  std::size_t last = fp.find_last_not_of('0');
  d.frac_part = last == std::string::npos ? "" : fp.substr(0, last + 1);
  if (d.int_part == "0" && d.frac_part.empty()) d.negative = false;
  return d;
}

int compare_magnitude(const DecimalParts& a, const DecimalParts& b) {
  if (a.int_part.size() != b.int_part.size())
    return a.int_part.size() < b.int_part.size() ? -1 : 1;
  if (int c = a.int_part.compare(b.int_part); c != 0) return c < 0 ? -1 : 1;
  std::size_t n = std::max(a.frac_part.size(), b.frac_part.size());
  for (std::size_t i = 0; i < n; ++i) {
    char ca = i < a.frac_part.size() ? a.frac_part[i] : '0';
    char cb = i < b.frac_part.size() ? b.frac_part[i] : '0';
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

// -1/0/1, or nullopt when either lexical form is not a valid number.
std::optional<int> compare_decimals(const std::string& a, const std::string& b) {
  auto da = parse_decimal(a), db = parse_decimal(b);
  if (!da || !db) return std::nullopt;
  if (da->negative != db->negative) return da->negative ? -1 : 1;
  int m = compare_magnitude(*da, *db);
  return da->negative ? -m : m;
}

bool is_numeric_literal(const Term& t) {
  return t.is_literal() && (t.datatype() == vocab::xsd_integer().value() ||
                            t.datatype() == vocab::xsd_decimal().value());
}

bool is_string_like(const Term& t) {
  return t.is_literal() && t.language().empty() &&
         t.datatype() == vocab::xsd_string().value();
}

Term bool_term(bool v) {
  return Term::literal(v ? "true" : "false", vocab::xsd_boolean().value());
}

}  // namespace

std::optional<bool> effective_boolean_value(const Term& t) {
  if (!t.is_literal()) return std::nullopt;
  const std::string& dt = t.datatype();
  if (dt == vocab::xsd_boolean().value()) {
    if (t.value() == "true" || t.value() == "1") return true;
    return false;  // "false", "0", and invalid lexical forms
  }
  if (dt == vocab::xsd_integer().value() || dt == vocab::xsd_decimal().value()) {
    auto d = parse_decimal(t.value());
    if (!d) return false;
    return !(d->int_part == "0" && d->frac_part.empty());
  }
  if (dt == vocab::xsd_string().value() || dt == vocab::rdf_langString().value())
    return !t.value().empty();
  return std::nullopt;
}

std::optional<Term> evaluate_expression(const Expr& e, const Binding& binding) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return e.constant;
    case Expr::Kind::Variable: {
      auto it = binding.find(e.var);
      if (it == binding.end()) return std::nullopt;
      return it->second;
    }
    case Expr::Kind::Bound:
      return bool_term(binding.find(e.var) != binding.end());
    case Expr::Kind::Compare: {
      auto a = evaluate_expression(e.args[0], binding);
      auto b = evaluate_expression(e.args[1], binding);
      if (!a || !b) return std::nullopt;
      if (is_numeric_literal(*a) && is_numeric_literal(*b)) {
        auto c = compare_decimals(a->value(), b->value());
        if (!c) return std::nullopt;
        if (e.cmp == "=") return bool_term(*c == 0);
        if (e.cmp == "!=") return bool_term(*c != 0);
        if (e.cmp == "<") return bool_term(*c < 0);
        if (e.cmp == "<=") return bool_term(*c <= 0);
        if (e.cmp == ">") return bool_term(*c > 0);
        if (e.cmp == ">=") return bool_term(*c >= 0);
        return std::nullopt;
      }
      // Non-numeric terms compare under structural equality only.
      if (e.cmp == "=") return bool_term(*a == *b);
      if (e.cmp == "!=") return bool_term(!(*a == *b));
      return std::nullopt;
    }
    case Expr::Kind::And: {
      auto a = evaluate_expression(e.args[0], binding);
      auto b = evaluate_expression(e.args[1], binding);
      std::optional<bool> ea = a ? effective_boolean_value(*a) : std::nullopt;
      std::optional<bool> eb = b ? effective_boolean_value(*b) : std::nullopt;
      if ((ea && !*ea) || (eb && !*eb)) return bool_term(false);
      if (!ea || !eb) return std::nullopt;
      return bool_term(true);
    }
    case Expr::Kind::Or: {
      auto a = evaluate_expression(e.args[0], binding);
      auto b = evaluate_expression(e.args[1], binding);
      std::optional<bool> ea = a ? effective_boolean_value(*a) : std::nullopt;
      std::optional<bool> eb = b ? effective_boolean_value(*b) : std::nullopt;
      if ((ea && *ea) || (eb && *eb)) return bool_term(true);
      if (!ea || !eb) return std::nullopt;
      return bool_term(false);
    }
    case Expr::Kind::Not: {
      auto a = evaluate_expression(e.args[0], binding);
      if (!a) return std::nullopt;
      auto ea = effective_boolean_value(*a);
      if (!ea) return std::nullopt;
      return bool_term(!*ea);
    }
    case Expr::Kind::Regex: {
      auto text = evaluate_expression(e.args[0], binding);
      auto pat = evaluate_expression(e.args[1], binding);
      if (!text || !pat) return std::nullopt;
      if (!is_string_like(*text) || !is_string_like(*pat)) return std::nullopt;
      auto flags = std::regex::ECMAScript;
      if (e.args.size() > 2) {
        auto f = evaluate_expression(e.args[2], binding);
        if (!f || !is_string_like(*f)) return std::nullopt;
        if (f->value().find('i') != std::string::npos) flags |= std::regex::icase;
      }
      try {
        std::regex re(pat->value(), flags);
        return bool_term(std::regex_search(text->value(), re));
      } catch (const std::regex_error&) {
        return std::nullopt;
      }
    }
    case Expr::Kind::Str: {
      auto a = evaluate_expression(e.args[0], binding);
      if (!a) return std::nullopt;
      if (a->is_iri()) return Term::literal(a->value(), vocab::xsd_string().value());
      if (a->is_literal()) return Term::literal(a->value(), vocab::xsd_string().value());
      return std::nullopt;
    }
    case Expr::Kind::Datatype: {
      auto a = evaluate_expression(e.args[0], binding);
      if (!a || !a->is_literal()) return std::nullopt;
      return Term::iri(a->datatype());
    }
    case Expr::Kind::Lang: {
      auto a = evaluate_expression(e.args[0], binding);
      if (!a || !a->is_literal()) return std::nullopt;
      if (a->language().empty()) return Term::literal("", vocab::xsd_string().value());
      return Term::literal(a->language(), vocab::xsd_string().value());
    }
  }
  return std::nullopt;
}

namespace {

bool try_bind(Binding& b, const PatternSlot& slot, const Term& actual) {
  if (!slot.is_var) return slot.term == actual;
  auto it = b.find(slot.var);
  if (it != b.end()) return it->second == actual;
  b.emplace(slot.var, actual);
  return true;
}

std::optional<Term> slot_value(const PatternSlot& slot, const Binding& b) {
  if (!slot.is_var) return slot.term;
  auto it = b.find(slot.var);
  if (it == b.end()) return std::nullopt;
  return it->second;
}

class Evaluator {
public:
  explicit Evaluator(const EvaluationDataset& eds) : eds_(eds) {}

  SolutionSequence eval(const AlgebraNode& n, const Graph& active,
                        const SolutionSequence& in) {
    switch (n.kind) {
      case AlgebraNode::Kind::Bgp: {
        SolutionSequence out;
        for (const auto& mu : in) extend_bgp(n.patterns, 0, active, mu, out);
        return out;
      }
      case AlgebraNode::Kind::Join:
        return eval(n.children[1], active, eval(n.children[0], active, in));
      case AlgebraNode::Kind::Union: {
        SolutionSequence out = eval(n.children[0], active, in);
        SolutionSequence right = eval(n.children[1], active, in);
        out.insert(out.end(), right.begin(), right.end());
        return out;
      }
      case AlgebraNode::Kind::Graph: {
        if (!n.graph_is_var) {
          return eval(n.children[0], eds_.graph(n.graph_name.value()), in);
        }
        SolutionSequence out;
        for (const auto& [iri, g] : eds_.named) {
          Term name = Term::iri(iri);
          SolutionSequence seeded;
          for (const auto& mu : in) {
            auto it = mu.find(n.graph_var);
            if (it != mu.end()) {
              if (it->second == name) seeded.push_back(mu);
            } else {
              Binding b = mu;
              b.emplace(n.graph_var, name);
              seeded.push_back(std::move(b));
            }
          }
          if (seeded.empty()) continue;
          SolutionSequence sub = eval(n.children[0], *g, seeded);
          out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
      }
      case AlgebraNode::Kind::Filter: {
        SolutionSequence out;
        for (auto& mu : eval(n.children[0], active, in)) {
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
        for (auto& mu : eval(n.children[0], active, in)) {
          SolutionSequence probe = eval(n.children[1], active, {mu});
          if (probe.empty() != want) out.push_back(std::move(mu));
        }
        return out;
      }
    }
    return {};
  }

private:
  const EvaluationDataset& eds_;

  void extend_bgp(const std::vector<TriplePattern>& patterns, std::size_t i,
                  const Graph& active, const Binding& mu, SolutionSequence& out) {
    if (i == patterns.size()) {
      out.push_back(mu);
      return;
    }
    const TriplePattern& p = patterns[i];
    auto s = slot_value(p.subject, mu);
    auto pr = slot_value(p.predicate, mu);
    auto o = slot_value(p.object, mu);
    for (const auto& t : active.match(s, pr, o)) {
      Binding next = mu;
      if (!try_bind(next, p.subject, t.subject)) continue;
      if (!try_bind(next, p.predicate, t.predicate)) continue;
      if (!try_bind(next, p.object, t.object)) continue;
      extend_bgp(patterns, i + 1, active, next, out);
    }
  }
};

}  // namespace

SolutionSequence project_solutions(const QueryAlgebra& query,
                                   const SolutionSequence& sols) {
  SolutionSequence out;
  out.reserve(sols.size());
  for (const auto& mu : sols) {
    Binding row;
    for (const auto& p : query.projection) {
      if (p.is_expr) {
        auto v = evaluate_expression(p.expr, mu);
        if (v) row.emplace(p.var, *v);
      } else {
        auto it = mu.find(p.var);
        if (it != mu.end()) row.emplace(p.var, it->second);
      }
    }
    out.push_back(std::move(row));
  }
  if (query.distinct) {
    SolutionSequence dedup;
    std::set<Binding> seen;
    for (auto& row : out) {
      if (seen.insert(row).second) dedup.push_back(std::move(row));
    }
    return dedup;
  }
  return out;
}

SolutionSequence evaluate(const QueryAlgebra& query, const EvaluationDataset& eds,
                          const Binding& pre_bound) {
  for (const auto& [var, term] : pre_bound) {
    if (var != "this")
      throw std::invalid_argument("pre-binding may bind only $this, got ?" + var);
  }
  Evaluator ev(eds);
  SolutionSequence seed{pre_bound};
  SolutionSequence sols = ev.eval(query.pattern, eds.default_graph(), seed);
  return project_solutions(query, sols);
}

}  // namespace shaclds
