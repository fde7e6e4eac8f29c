#pragma once

#include "shaclds/dataset.hpp"
#include "shaclds/graph.hpp"
#include "shaclds/report.hpp"
#include "shaclds/sparql.hpp"
#include "shaclds/term.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shaclds {

/// Shape/constraint loading failure; names the offending shape or node.
class ShapeLoadError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SparqlConstraint {
  Term id;
  std::string select_text;
  QueryAlgebra parsed;
  std::optional<Term> message;
};

struct Constraint {
  enum class Kind {
    Datatype,
    Pattern,
    MinCount,
    MaxCount,
    Class,
    NodeKind,
    In,
    Or,
    Not,
    Node,
    Property,
    Sparql
  };
  Kind kind;
  Term term_param;                    // datatype / class / nodeKind IRI
  std::string pattern;                // Pattern
  std::string flags;                  // Pattern
  long long count = 0;                // MinCount / MaxCount
  std::vector<Term> in_values;        // In
  std::vector<std::size_t> shape_refs;  // Or members, Not, Node, Property
  std::shared_ptr<SparqlConstraint> sparql;
};

struct TargetDecl {
  enum class Kind { Class, Node, SubjectsOf, ObjectsOf } kind;
  Term term;
};

struct PathSpec {
  Term predicate;
  bool inverse = false;
};

struct Shape {
  Term id;
  bool is_property = false;
  std::optional<PathSpec> path;
  std::vector<TargetDecl> targets;
  std::vector<Constraint> constraints;
  Term severity;  // defaults to sh:Violation
  std::vector<Term> messages;
  bool deactivated = false;
};

/// All shapes of one shapes graph, index-addressed so constraints can refer
/// to member shapes without ownership cycles.
struct ShapesLoad {
  std::vector<Shape> shapes;
  std::vector<std::string> diagnostics;  // unknown parameters, ignored links
};

/// Load every shape of the graph: subjects typed sh:NodeShape or
/// sh:PropertyShape plus nodes referenced via sh:property / sh:node / sh:or /
/// sh:not. Unknown sh: parameters become diagnostics; malformed shapes and
/// shape-reference cycles throw.
ShapesLoad load_shapes(const Graph& g);

/// Focus nodes selected by the shape's target declarations over the data
/// graph. targetClass walks rdfs:subClassOf chains found in the data.
std::vector<Term> resolve_targets(const Shape& shape, const Graph& data);

/// True iff the lookup graph types `value` with the class or with a class
/// linked to it through an rdfs:subClassOf chain.
bool check_class(const Term& value, const Term& cls, const Graph& lookup);

/// Validate every targeted shape against the view's default graph. SPARQL
/// constraints run against the full evaluation dataset.
ValidationReport validate_graph(const ShapesLoad& shapes, const EvaluationDataset& eds);

}  // namespace shaclds
