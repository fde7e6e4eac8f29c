#pragma once

#include "shaclds/dataset.hpp"
#include "shaclds/term.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shaclds {

/// Position/message error thrown by the query parser. Unsupported constructs
/// are reported with the construct's name.
class QueryParseError : public std::runtime_error {
public:
  QueryParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// One slot of a triple pattern: a concrete term or a variable (no sigil).
struct PatternSlot {
  bool is_var = false;
  Term term;
  std::string var;

  static PatternSlot variable(std::string name) {
    PatternSlot s;
    s.is_var = true;
    s.var = std::move(name);
    return s;
  }
  static PatternSlot constant(Term t) {
    PatternSlot s;
    s.term = std::move(t);
    return s;
  }
};

struct TriplePattern {
  PatternSlot subject, predicate, object;
};

/// Expression tree for FILTER and projection expressions.
struct Expr {
  enum class Kind { Constant, Variable, Compare, And, Or, Not, Regex, Str, Datatype, Lang, Bound };
  Kind kind = Kind::Constant;
  Term constant;
  std::string var;       // Variable / Bound
  std::string cmp;       // Compare: = != < <= > >=
  std::vector<Expr> args;
};

/// Pattern algebra. Children layout per kind:
///   Bgp            — patterns[], no children
///   Graph          — children[0] = body; name is an IRI or a variable
///   Join / Union   — children[0], children[1]
///   Filter         — children[0] = filtered pattern; expr
///   FilterExists / FilterNotExists — children[0] = filtered pattern,
///                    children[1] = existence pattern
struct AlgebraNode {
  enum class Kind { Bgp, Graph, Join, Union, Filter, FilterExists, FilterNotExists };
  Kind kind = Kind::Bgp;
  std::vector<TriplePattern> patterns;
  bool graph_is_var = false;
  Term graph_name;
  std::string graph_var;
  Expr expr;
  std::vector<AlgebraNode> children;
};

struct Projection {
  bool is_expr = false;
  std::string var;  // output variable name
  Expr expr;        // when is_expr
};

struct QueryAlgebra {
  std::vector<Projection> projection;
  bool distinct = false;
  AlgebraNode pattern;
  std::map<std::string, std::string> prefixes;
};

/// Solution binding: variable name (no sigil) → term. Ordered map so
/// bindings compare deterministically.
using Binding = std::map<std::string, Term>;
using SolutionSequence = std::vector<Binding>;

QueryAlgebra parse_query(std::string_view text);

/// Evaluate against an evaluation dataset. Bare triple patterns match the
/// default graph; GRAPH <iri> matches that named graph; GRAPH ?v ranges over
/// every named graph. pre_bound may bind `this` only.
SolutionSequence evaluate(const QueryAlgebra& query, const EvaluationDataset& eds,
                          const Binding& pre_bound = {});

/// Same contract as evaluate, computed by exhaustive enumeration of
/// candidate bindings with direct pattern checking. Rejects datasets over
/// 10^4 triples.
SolutionSequence evaluate_oracle(const QueryAlgebra& query,
                                 const EvaluationDataset& eds,
                                 const Binding& pre_bound = {});

/// Expression evaluation under SPARQL error semantics (nullopt = error).
std::optional<Term> evaluate_expression(const Expr& e, const Binding& binding);

/// Apply a query's projection (incl. AS expressions and DISTINCT) to raw
/// pattern solutions.
SolutionSequence project_solutions(const QueryAlgebra& query,
                                   const SolutionSequence& sols);

/// Effective boolean value; nullopt on type error.
std::optional<bool> effective_boolean_value(const Term& t);

/// Variables appearing in the pattern (not in filter-exists subpatterns).
void collect_pattern_variables(const AlgebraNode& node, std::vector<std::string>& out);

}  // namespace shaclds
