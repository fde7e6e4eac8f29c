#include "shaclds/shapes.hpp"
#include "shaclds/vocab.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace shaclds {

namespace {

/// Per-run validator over one evaluation dataset. The graph under validation
/// is the view's default graph; SPARQL constraints see the whole view.
class GraphValidator {
public:
  GraphValidator(const ShapesLoad& shapes, const EvaluationDataset& eds)
      : shapes_(shapes), eds_(eds), data_(eds.default_graph()) {}

  ValidationReport run() {
    ValidationReport report;
    for (const auto& shape : shapes_.shapes) {
      if (shape.targets.empty() || shape.deactivated) continue;
      for (const auto& focus : resolve_targets(shape, data_)) {
        validate_shape(shape, focus, &report.results);
      }
    }
    normalize_report(report);
    report.conforms = compute_conforms(report);
    return report;
  }

private:
  const ShapesLoad& shapes_;
  const EvaluationDataset& eds_;
  const Graph& data_;

  std::vector<Term> value_nodes(const Shape& shape, const Term& focus) const {
    if (!shape.is_property) return {focus};
    std::vector<Term> values;
    const PathSpec& path = *shape.path;
    if (!path.inverse) {
      for (const auto& t : data_.match(focus, path.predicate, std::nullopt))
        values.push_back(t.object);
    } else {
      for (const auto& t : data_.match(std::nullopt, path.predicate, focus))
        values.push_back(t.subject);
    }
    return values;
  }

  std::optional<Term> shape_message(const Shape& shape) const {
    if (shape.messages.empty()) return std::nullopt;
    return shape.messages.front();  // messages are sorted at load
  }

  void emit(const Shape& shape, const Term& focus, const std::optional<Term>& value,
            const Term& component, std::vector<ValidationResult>* sink,
            const std::optional<Term>& message_override = std::nullopt,
            const std::optional<Term>& path_override = std::nullopt) const {
    if (!sink) return;
    ValidationResult r;
    r.focus = focus;
    if (path_override) {
      r.path = path_override;
    } else if (shape.is_property && !shape.path->inverse) {
      r.path = shape.path->predicate;
    }
    r.value = value;
    r.source_shape = shape.id;
    r.component = component;
    r.severity = shape.severity;
    r.message = message_override ? message_override : shape_message(shape);
    sink->push_back(std::move(r));
  }

  /// Validates one focus node against a shape. With a null sink this is a
  /// conformance probe (sh:or / sh:not / sh:node) that stops at the first
  /// result.
  bool validate_shape(const Shape& shape, const Term& focus,
                      std::vector<ValidationResult>* sink) const {
    if (shape.deactivated) return true;
    bool ok = true;
    std::vector<Term> values = value_nodes(shape, focus);

    for (const auto& c : shape.constraints) {
      switch (c.kind) {
        case Constraint::Kind::MinCount:
          if (static_cast<long long>(values.size()) < c.count) {
            ok = false;
            emit(shape, focus, std::nullopt, vocab::sh_MinCountConstraintComponent(), sink);
          }
          break;
        case Constraint::Kind::MaxCount:
          if (static_cast<long long>(values.size()) > c.count) {
            ok = false;
            emit(shape, focus, std::nullopt, vocab::sh_MaxCountConstraintComponent(), sink);
          }
          break;
        case Constraint::Kind::Datatype:
          for (const auto& v : values) {
            if (!v.is_literal() || v.datatype() != c.term_param.value()) {
              ok = false;
              emit(shape, focus, v, vocab::sh_DatatypeConstraintComponent(), sink);
            }
          }
          break;
        case Constraint::Kind::Pattern:
          for (const auto& v : values) {
            if (!matches_pattern(c, v)) {
              ok = false;
              emit(shape, focus, v, vocab::sh_PatternConstraintComponent(), sink);
            }
          }
          break;
        case Constraint::Kind::Class:
          for (const auto& v : values) {
            if (!check_class(v, c.term_param, data_)) {
              ok = false;
              emit(shape, focus, v, vocab::sh_ClassConstraintComponent(), sink);
            }
          }
          break;
        case Constraint::Kind::NodeKind:
          for (const auto& v : values) {
            if (!matches_node_kind(c.term_param, v)) {
              ok = false;
              emit(shape, focus, v, vocab::sh_NodeKindConstraintComponent(), sink);
            }
          }
          break;
        case Constraint::Kind::In:
          for (const auto& v : values) {
            if (std::find(c.in_values.begin(), c.in_values.end(), v) ==
                c.in_values.end()) {
              ok = false;
              emit(shape, focus, v, vocab::sh_InConstraintComponent(), sink);
            }
          }
          break;
        case Constraint::Kind::Or:
          for (const auto& v : values) {
            bool any = false;
            for (std::size_t ref : c.shape_refs) {
              if (conforms(shapes_.shapes[ref], v)) {
                any = true;
                break;
              }
            }
            if (!any) {
              ok = false;
              emit(shape, focus, v, vocab::sh_OrConstraintComponent(), sink);
            }
          }
          break;
        case Constraint::Kind::Not:
          for (const auto& v : values) {
            if (conforms(shapes_.shapes[c.shape_refs[0]], v)) {
              ok = false;
              emit(shape, focus, v, vocab::sh_NotConstraintComponent(), sink);
            }
          }
          break;
        case Constraint::Kind::Node:
          for (const auto& v : values) {
            if (!conforms(shapes_.shapes[c.shape_refs[0]], v)) {
              ok = false;
              emit(shape, focus, v, vocab::sh_NodeConstraintComponent(), sink);
            }
          }
          break;
        case Constraint::Kind::Property:
          for (const auto& v : values) {
            if (!validate_shape(shapes_.shapes[c.shape_refs[0]], v, sink)) ok = false;
          }
          break;
        case Constraint::Kind::Sparql: {
          Binding pre{{"this", focus}};
          SolutionSequence rows = evaluate(c.sparql->parsed, eds_, pre);
          for (const auto& row : rows) {
            ok = false;
            std::optional<Term> path;
            if (auto it = row.find("path"); it != row.end()) path = it->second;
            std::optional<Term> value;
            if (auto it = row.find("value"); it != row.end()) value = it->second;
            std::optional<Term> message =
                c.sparql->message ? c.sparql->message : shape_message(shape);
            if (sink) {
              emit(shape, focus, value, vocab::sh_SPARQLConstraintComponent(), sink,
                   message, path ? path : std::optional<Term>());
            }
          }
          break;
        }
      }
      if (!ok && !sink) return false;  // conformance probe: first hit decides
    }
    return ok;
  }

  bool conforms(const Shape& shape, const Term& node) const {
    return validate_shape(shape, node, nullptr);
  }

  static bool matches_pattern(const Constraint& c, const Term& v) {
    if (v.is_blank()) return false;
    const std::string& text = v.value();  // lexical form or IRI string
    auto f = std::regex::ECMAScript;
    if (c.flags.find('i') != std::string::npos) f |= std::regex::icase;
    std::regex re(c.pattern, f);
    return std::regex_search(text, re);
  }

  static bool matches_node_kind(const Term& kind, const Term& v) {
    if (kind == vocab::sh_IRI()) return v.is_iri();
    if (kind == vocab::sh_BlankNode()) return v.is_blank();
    if (kind == vocab::sh_Literal()) return v.is_literal();
    if (kind == vocab::sh_BlankNodeOrIRI()) return v.is_blank() || v.is_iri();
    if (kind == vocab::sh_BlankNodeOrLiteral()) return v.is_blank() || v.is_literal();
    if (kind == vocab::sh_IRIOrLiteral()) return v.is_iri() || v.is_literal();
    return false;
  }
};

}  // namespace

ValidationReport validate_graph(const ShapesLoad& shapes, const EvaluationDataset& eds) {
  return GraphValidator(shapes, eds).run();
}

}  // namespace shaclds
