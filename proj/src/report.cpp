#include "shaclds/report.hpp"
#include "shaclds/io.hpp"
#include "shaclds/vocab.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace shaclds {

namespace {

std::string opt_key(const std::optional<Term>& t) {
  return t ? t->to_ntriples() : std::string();
}

auto result_sort_key(const ValidationResult& r) {
  return std::make_tuple(opt_key(r.focus_graph), r.source_shape.to_ntriples(),
                         r.focus.to_ntriples(), opt_key(r.path),
                         r.value ? r.value->value() : std::string(), opt_key(r.value),
                         r.component.to_ntriples(), r.severity.to_ntriples(),
                         opt_key(r.message), opt_key(r.shapes_graph));
}

}  // namespace

void normalize_report(ValidationReport& report) {
  std::sort(report.results.begin(), report.results.end(),
            [](const ValidationResult& a, const ValidationResult& b) {
              return result_sort_key(a) < result_sort_key(b);
            });
}

bool compute_conforms(const ValidationReport& report) {
  for (const auto& r : report.results) {
    if (r.severity == vocab::sh_Violation()) return false;
  }
  return true;
}

std::string serialize_report(const ValidationReport& report) {
  ValidationReport sorted = report;
  normalize_report(sorted);

  std::map<std::string, std::string> prefixes{
      {"rdf", ns::rdf}, {"sh", ns::sh}, {"shds", ns::shds}, {"xsd", ns::xsd}};

  auto term_str = [&prefixes](const Term& t) -> std::string {
    if (t.is_iri()) {
      for (const auto& [p, nsiri] : prefixes) {
        const std::string& v = t.value();
        if (v.size() > nsiri.size() && v.compare(0, nsiri.size(), nsiri) == 0) {
          std::string local = v.substr(nsiri.size());
          bool safe = !local.empty();
          for (unsigned char c : local) {
            if (!(std::isalnum(c) || c == '_' || c == '-')) {
              safe = false;
              break;
            }
          }
          if (safe) return p + ":" + local;
        }
      }
      return "<" + t.value() + ">";
    }
    return t.to_ntriples();
  };

  std::ostringstream os;
  for (const auto& [p, nsiri] : prefixes) os << "@prefix " << p << ": <" << nsiri << "> .\n";
  os << "\n";
  os << "[] a sh:ValidationReport ;\n";
  os << "  sh:conforms " << (sorted.conforms ? "true" : "false");
  for (const auto& r : sorted.results) {
    os << " ;\n  sh:result [\n";
    os << "    a sh:ValidationResult ;\n";
    os << "    sh:focusNode " << term_str(r.focus) << " ;\n";
    if (r.path) os << "    sh:resultPath " << term_str(*r.path) << " ;\n";
    if (r.value) os << "    sh:value " << term_str(*r.value) << " ;\n";
    os << "    sh:sourceShape " << term_str(r.source_shape) << " ;\n";
    os << "    sh:sourceConstraintComponent " << term_str(r.component) << " ;\n";
    if (r.message) os << "    sh:resultMessage " << term_str(*r.message) << " ;\n";
    if (r.focus_graph) os << "    shds:focusGraph " << term_str(*r.focus_graph) << " ;\n";
    if (r.shapes_graph)
      os << "    shds:sourceShapeGraph " << term_str(*r.shapes_graph) << " ;\n";
    os << "    sh:resultSeverity " << term_str(r.severity) << "\n  ]";
  }
  os << " .\n";
  return os.str();
}

ValidationReport report_from_graph(const Graph& g) {
  ValidationReport report;
  auto report_nodes = g.match(std::nullopt, vocab::rdf_type(), vocab::sh_ValidationReport());
  if (report_nodes.empty()) throw std::runtime_error("no sh:ValidationReport node found");
  const Term& root = report_nodes.front().subject;

  auto conforms = g.match(root, vocab::sh_conforms(), std::nullopt);
  report.conforms = !conforms.empty() && conforms.front().object.value() == "true";

  auto one = [&g](const Term& node, const Term& pred) -> std::optional<Term> {
    auto m = g.match(node, pred, std::nullopt);
    if (m.empty()) return std::nullopt;
    return m.front().object;
  };

  for (const auto& t : g.match(root, vocab::sh_result(), std::nullopt)) {
    const Term& node = t.object;
    ValidationResult r;
    auto focus = one(node, vocab::sh_focusNode());
    if (!focus) throw std::runtime_error("validation result without sh:focusNode");
    r.focus = *focus;
    r.path = one(node, vocab::sh_resultPath());
    r.value = one(node, vocab::sh_value());
    auto shape = one(node, vocab::sh_sourceShape());
    if (!shape) throw std::runtime_error("validation result without sh:sourceShape");
    r.source_shape = *shape;
    auto comp = one(node, vocab::sh_sourceConstraintComponent());
    r.component = comp ? *comp : vocab::sh_SPARQLConstraintComponent();
    auto sev = one(node, vocab::sh_resultSeverity());
    r.severity = sev ? *sev : vocab::sh_Violation();
    r.message = one(node, vocab::sh_resultMessage());
    r.focus_graph = one(node, vocab::shds_focusGraph());
    r.shapes_graph = one(node, vocab::shds_sourceShapeGraph());
    report.results.push_back(std::move(r));
  }
  normalize_report(report);
  return report;
}

}  // namespace shaclds
