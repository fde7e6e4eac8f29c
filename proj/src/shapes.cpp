#include "shaclds/shapes.hpp"
#include "shaclds/vocab.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

namespace shaclds {

namespace {

std::string shape_name(const Term& t) { return t.to_ntriples(); }

/// Read an rdf:first/rdf:rest collection; throws on malformed lists.
std::vector<Term> read_collection(const Graph& g, const Term& head,
                                  const std::string& context) {
  std::vector<Term> out;
  Term node = head;
  std::set<Term> seen;
  while (!(node == vocab::rdf_nil())) {
    if (!seen.insert(node).second)
      throw ShapeLoadError("malformed collection (cycle) at " + context);
    auto first = g.match(node, vocab::rdf_first(), std::nullopt);
    auto rest = g.match(node, vocab::rdf_rest(), std::nullopt);
    if (first.size() != 1 || rest.size() != 1)
      throw ShapeLoadError("malformed collection at " + context);
    out.push_back(first.front().object);
    node = rest.front().object;
  }
  return out;
}

class ShapesLoader {
public:
  explicit ShapesLoader(const Graph& g) : g_(g) {}

  ShapesLoad run() {
    collect_roots();
    // Parse queue-driven: referenced shapes are discovered while parsing.
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      parse_shape(queue_[i]);
    }
    detect_cycles();
    return std::move(out_);
  }

private:
  const Graph& g_;
  ShapesLoad out_;
  std::vector<Term> queue_;
  std::map<Term, std::size_t> index_;

  std::size_t shape_index(const Term& node) {
    auto it = index_.find(node);
    if (it != index_.end()) return it->second;
    std::size_t idx = queue_.size();
    index_.emplace(node, idx);
    queue_.push_back(node);
    out_.shapes.emplace_back();
    out_.shapes.back().id = node;
    out_.shapes.back().severity = vocab::sh_Violation();
    return idx;
  }

  void collect_roots() {
    for (const auto& t : g_.match(std::nullopt, vocab::rdf_type(), vocab::sh_NodeShape()))
      shape_index(t.subject);
    for (const auto& t : g_.match(std::nullopt, vocab::rdf_type(), vocab::sh_PropertyShape()))
      shape_index(t.subject);
    // Untyped shapes: subjects that attach constraints or targets (the ERA
    // listings leave node shapes untyped), and anything referenced as a
    // shape is picked up transitively while parsing.
    for (const Term& pred :
         {vocab::sh_property(), vocab::sh_sparql(), vocab::sh_targetClass(),
          vocab::sh_targetNode(), vocab::sh_targetSubjectsOf(),
          vocab::sh_targetObjectsOf()}) {
      for (const auto& t : g_.match(std::nullopt, pred, std::nullopt))
        shape_index(t.subject);
    }
  }

  std::optional<Term> one(const Term& node, const Term& pred, const char* what) {
    auto m = g_.match(node, pred, std::nullopt);
    if (m.empty()) return std::nullopt;
    if (m.size() > 1)
      throw ShapeLoadError(std::string("multiple ") + what + " values on shape " +
                           shape_name(node));
    return m.front().object;
  }

  long long int_value(const Term& t, const Term& shape, const char* what) {
    if (!t.is_literal() || t.datatype() != vocab::xsd_integer().value())
      throw ShapeLoadError(std::string(what) + " on shape " + shape_name(shape) +
                           " is not an integer: " + t.to_ntriples());
    try {
      long long v = std::stoll(t.value());
      if (v < 0)
        throw ShapeLoadError(std::string(what) + " on shape " + shape_name(shape) +
                             " is negative");
      return v;
    } catch (const ShapeLoadError&) {
      throw;
    } catch (const std::exception&) {
      throw ShapeLoadError(std::string(what) + " on shape " + shape_name(shape) +
                           " is not an integer: " + t.to_ntriples());
    }
  }

  void parse_shape(const Term& node) {
    std::size_t idx = index_.at(node);

    // Path determines the shape kind; explicit types are cross-checked.
    bool typed_node = g_.any(node, vocab::rdf_type(), vocab::sh_NodeShape());
    bool typed_property = g_.any(node, vocab::rdf_type(), vocab::sh_PropertyShape());
    auto path_term = one(node, vocab::sh_path(), "sh:path");
    if (typed_property && !path_term)
      throw ShapeLoadError("property shape " + shape_name(node) + " has no sh:path");
    if (typed_node && path_term)
      throw ShapeLoadError("node shape " + shape_name(node) + " carries sh:path");

    if (path_term) {
      out_.shapes[idx].is_property = true;
      out_.shapes[idx].path = parse_path(*path_term, node);
    }

    for (const auto& t : g_.match(node, std::nullopt, std::nullopt)) {
      const Term& pred = t.predicate;
      const Term& obj = t.object;
      if (pred == vocab::rdf_type() || pred == vocab::sh_path()) continue;
      if (pred == vocab::sh_targetClass()) {
        out_.shapes[idx].targets.push_back({TargetDecl::Kind::Class, obj});
      } else if (pred == vocab::sh_targetNode()) {
        out_.shapes[idx].targets.push_back({TargetDecl::Kind::Node, obj});
      } else if (pred == vocab::sh_targetSubjectsOf()) {
        out_.shapes[idx].targets.push_back({TargetDecl::Kind::SubjectsOf, obj});
      } else if (pred == vocab::sh_targetObjectsOf()) {
        out_.shapes[idx].targets.push_back({TargetDecl::Kind::ObjectsOf, obj});
      } else if (pred == vocab::sh_datatype()) {
        Constraint c;
        c.kind = Constraint::Kind::Datatype;
        c.term_param = obj;
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_pattern()) {
        Constraint c;
        c.kind = Constraint::Kind::Pattern;
        if (!obj.is_literal())
          throw ShapeLoadError("sh:pattern on shape " + shape_name(node) +
                               " is not a literal");
        c.pattern = obj.value();
        if (auto flags = one(node, vocab::sh_flags(), "sh:flags")) c.flags = flags->value();
        try {
          auto f = std::regex::ECMAScript;
          if (c.flags.find('i') != std::string::npos) f |= std::regex::icase;
          std::regex probe(c.pattern, f);
        } catch (const std::regex_error& e) {
          throw ShapeLoadError("sh:pattern on shape " + shape_name(node) +
                               " does not compile: " + e.what());
        }
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_minCount()) {
        Constraint c;
        c.kind = Constraint::Kind::MinCount;
        c.count = int_value(obj, node, "sh:minCount");
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_maxCount()) {
        Constraint c;
        c.kind = Constraint::Kind::MaxCount;
        c.count = int_value(obj, node, "sh:maxCount");
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_class()) {
        Constraint c;
        c.kind = Constraint::Kind::Class;
        c.term_param = obj;
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_nodeKind()) {
        Constraint c;
        c.kind = Constraint::Kind::NodeKind;
        if (!(obj == vocab::sh_IRI() || obj == vocab::sh_BlankNode() ||
              obj == vocab::sh_Literal() || obj == vocab::sh_BlankNodeOrIRI() ||
              obj == vocab::sh_BlankNodeOrLiteral() || obj == vocab::sh_IRIOrLiteral()))
          throw ShapeLoadError("unknown sh:nodeKind on shape " + shape_name(node) +
                               ": " + obj.to_ntriples());
        c.term_param = obj;
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_in()) {
        Constraint c;
        c.kind = Constraint::Kind::In;
        c.in_values = read_collection(g_, obj, "sh:in of " + shape_name(node));
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_or()) {
        Constraint c;
        c.kind = Constraint::Kind::Or;
        for (const auto& member :
             read_collection(g_, obj, "sh:or of " + shape_name(node)))
          c.shape_refs.push_back(shape_index(member));
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_not()) {
        Constraint c;
        c.kind = Constraint::Kind::Not;
        c.shape_refs.push_back(shape_index(obj));
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_node()) {
        Constraint c;
        c.kind = Constraint::Kind::Node;
        c.shape_refs.push_back(shape_index(obj));
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_property()) {
        Constraint c;
        c.kind = Constraint::Kind::Property;
        c.shape_refs.push_back(shape_index(obj));
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_sparql()) {
        Constraint c;
        c.kind = Constraint::Kind::Sparql;
        c.sparql = parse_sparql_constraint(obj, node);
        out_.shapes[idx].constraints.push_back(std::move(c));
      } else if (pred == vocab::sh_severity()) {
        out_.shapes[idx].severity = obj;
      } else if (pred == vocab::sh_message()) {
        out_.shapes[idx].messages.push_back(obj);
      } else if (pred == vocab::sh_deactivated()) {
        out_.shapes[idx].deactivated = obj.is_literal() && obj.value() == "true";
      } else if (pred == vocab::sh_flags()) {
        // consumed with sh:pattern
      } else if (pred.value().rfind(ns::sh, 0) == 0) {
        out_.diagnostics.push_back("unknown constraint parameter " +
                                   pred.to_ntriples() + " on shape " +
                                   shape_name(node) + " ignored");
      }
    }
    std::sort(out_.shapes[idx].messages.begin(), out_.shapes[idx].messages.end());
  }

  PathSpec parse_path(const Term& path_term, const Term& shape) {
    if (path_term.is_iri()) return {path_term, false};
    if (path_term.is_blank()) {
      if (g_.any(path_term, vocab::rdf_first(), std::nullopt))
        throw ShapeLoadError("sequence paths are not supported (shape " +
                             shape_name(shape) + ")");
      auto inv = one(path_term, vocab::sh_inversePath(), "sh:inversePath");
      if (inv && inv->is_iri()) return {*inv, true};
      throw ShapeLoadError("unsupported sh:path expression on shape " +
                           shape_name(shape));
    }
    throw ShapeLoadError("invalid sh:path on shape " + shape_name(shape));
  }

  std::shared_ptr<SparqlConstraint> parse_sparql_constraint(const Term& node,
                                                            const Term& shape) {
    auto sc = std::make_shared<SparqlConstraint>();
    sc->id = node;
    auto select = one(node, vocab::sh_select(), "sh:select");
    if (!select || !select->is_literal())
      throw ShapeLoadError("SPARQL constraint " + shape_name(node) + " of shape " +
                           shape_name(shape) + " has no sh:select string");
    sc->select_text = select->value();
    if (g_.any(node, vocab::sh_prefixes(), std::nullopt))
      out_.diagnostics.push_back("sh:prefixes on " + shape_name(node) +
                                 " ignored; prefixes are read from the query text");
    if (auto msg = one(node, vocab::sh_message(), "sh:message")) sc->message = msg;
    try {
      sc->parsed = parse_query(sc->select_text);
    } catch (const QueryParseError& e) {
      throw ShapeLoadError("sh:select of constraint " + shape_name(node) +
                           " on shape " + shape_name(shape) +
                           " does not parse: " + e.what());
    }
    bool projects_this = false;
    for (const auto& p : sc->parsed.projection) {
      if (p.var == "this") projects_this = true;
    }
    if (!projects_this)
      throw ShapeLoadError("sh:select of constraint " + shape_name(node) +
                           " on shape " + shape_name(shape) +
                           " does not project $this");
    return sc;
  }

  void detect_cycles() {
    enum class Mark { None, Active, Done };
    std::vector<Mark> marks(out_.shapes.size(), Mark::None);
    std::vector<std::size_t> stack;
    auto visit = [&](auto&& self, std::size_t idx) -> void {
      if (marks[idx] == Mark::Done) return;
      if (marks[idx] == Mark::Active)
        throw ShapeLoadError("shape reference cycle involving " +
                             shape_name(out_.shapes[idx].id));
      marks[idx] = Mark::Active;
      for (const auto& c : out_.shapes[idx].constraints) {
        for (std::size_t ref : c.shape_refs) self(self, ref);
      }
      marks[idx] = Mark::Done;
    };
    for (std::size_t i = 0; i < out_.shapes.size(); ++i) visit(visit, i);
  }
};

}  // namespace

ShapesLoad load_shapes(const Graph& g) { return ShapesLoader(g).run(); }

namespace {

/// Downward subclass closure: every class reachable from `cls` against
/// rdfs:subClassOf arrows (cycle-safe).
std::vector<Term> subclass_closure_down(const Term& cls, const Graph& g) {
  std::vector<Term> out{cls};
  std::set<Term> seen{cls};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& t : g.match(std::nullopt, vocab::rdfs_subClassOf(), out[i])) {
      if (seen.insert(t.subject).second) out.push_back(t.subject);
    }
  }
  return out;
}

}  // namespace

std::vector<Term> resolve_targets(const Shape& shape, const Graph& data) {
  std::set<Term> focus;
  for (const auto& target : shape.targets) {
    switch (target.kind) {
      case TargetDecl::Kind::Node:
        focus.insert(target.term);
        break;
      case TargetDecl::Kind::Class:
        for (const auto& cls : subclass_closure_down(target.term, data)) {
          for (const auto& t : data.match(std::nullopt, vocab::rdf_type(), cls))
            focus.insert(t.subject);
        }
        break;
      case TargetDecl::Kind::SubjectsOf:
        for (const auto& t : data.match(std::nullopt, target.term, std::nullopt))
          focus.insert(t.subject);
        break;
      case TargetDecl::Kind::ObjectsOf:
        for (const auto& t : data.match(std::nullopt, target.term, std::nullopt))
          focus.insert(t.object);
        break;
    }
  }
  return {focus.begin(), focus.end()};
}

bool check_class(const Term& value, const Term& cls, const Graph& lookup) {
  std::set<Term> seen;
  std::vector<Term> frontier;
  for (const auto& t : lookup.match(value, vocab::rdf_type(), std::nullopt)) {
    if (seen.insert(t.object).second) frontier.push_back(t.object);
  }
  // Walk rdfs:subClassOf chains upward from the asserted types.
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    if (frontier[i] == cls) return true;
    for (const auto& t : lookup.match(frontier[i], vocab::rdfs_subClassOf(), std::nullopt)) {
      if (seen.insert(t.object).second) frontier.push_back(t.object);
    }
  }
  return false;
}

}  // namespace shaclds
