#include "shaclds/io.hpp"
#include "shaclds/vocab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace shaclds {

namespace {

bool local_part_safe(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (!(std::isalnum(c) || c == '_' || c == '-')) return false;
  }
  return true;
}

/// Shorten an IRI against the prefix map; falls back to <...>.
std::string render_iri(const std::string& iri,
                       const std::map<std::string, std::string>& prefixes) {
  const std::string* best_prefix = nullptr;
  const std::string* best_ns = nullptr;
  for (const auto& [prefix, nsiri] : prefixes) {
    if (iri.size() >= nsiri.size() && iri.compare(0, nsiri.size(), nsiri) == 0) {
      if (!best_ns || nsiri.size() > best_ns->size()) {
        best_prefix = &prefix;
        best_ns = &nsiri;
      }
    }
  }
  if (best_ns) {
    std::string local = iri.substr(best_ns->size());
    if (local.empty() || local_part_safe(local)) return *best_prefix + ":" + local;
  }
  return "<" + iri + ">";
}

std::string render_term(const Term& t,
                        const std::map<std::string, std::string>& prefixes) {
  switch (t.kind()) {
    case TermKind::Iri:
      if (t == vocab::rdf_type()) return "a";
      return render_iri(t.value(), prefixes);
    case TermKind::Blank:
      return "_:" + t.value();
    case TermKind::Literal: {
      std::string out = "\"" + escape_string_literal(t.value()) + "\"";
      if (!t.language().empty()) {
        out += "@" + t.language();
      } else if (t.datatype() != vocab::xsd_string().value()) {
        out += "^^" + render_iri(t.datatype(), prefixes);
      }
      return out;
    }
  }
  return {};
}

void write_graph_body(std::ostringstream& os, const Graph& g,
                      const std::map<std::string, std::string>& prefixes,
                      const std::string& indent) {
  // Group by subject, emit predicate and object lists; term order throughout.
  std::vector<Triple> triples = g.triples();
  std::sort(triples.begin(), triples.end());
  std::size_t i = 0;
  while (i < triples.size()) {
    const Term& subject = triples[i].subject;
    os << indent << render_term(subject, prefixes);
    bool first_pred = true;
    while (i < triples.size() && triples[i].subject == subject) {
      const Term& predicate = triples[i].predicate;
      os << (first_pred ? " " : std::string(" ;\n") + indent + "  ")
         << render_term(predicate, prefixes) << " ";
      first_pred = false;
      bool first_obj = true;
      while (i < triples.size() && triples[i].subject == subject &&
             triples[i].predicate == predicate) {
        if (!first_obj) os << ", ";
        os << render_term(triples[i].object, prefixes);
        first_obj = false;
        ++i;
      }
    }
    os << " .\n";
  }
}

void write_prefixes(std::ostringstream& os,
                    const std::map<std::string, std::string>& prefixes) {
  for (const auto& [prefix, iri] : prefixes) {
    os << "@prefix " << prefix << ": <" << iri << "> .\n";
  }
  if (!prefixes.empty()) os << "\n";
}

}  // namespace

std::string serialize_nquads(const Dataset& d) {
  struct Row {
    Triple t;
    std::optional<Term> g;
  };
  std::vector<Row> rows;
  rows.reserve(d.total_size());
  for (const auto& t : d.default_graph().triples()) rows.push_back({t, std::nullopt});
  for (const auto& [iri, g] : d.named()) {
    Term name = Term::iri(iri);
    for (const auto& t : g->triples()) rows.push_back({t, name});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    bool an = a.g.has_value(), bn = b.g.has_value();
    if (an != bn) return !an;  // default graph first
    if (an && *a.g != *b.g) return *a.g < *b.g;
    return a.t < b.t;
  });
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.t.subject.to_ntriples() << " " << r.t.predicate.to_ntriples() << " "
       << r.t.object.to_ntriples();
    if (r.g) os << " " << r.g->to_ntriples();
    os << " .\n";
  }
  return os.str();
}

std::string serialize_turtle(const Graph& g,
                             const std::map<std::string, std::string>& prefixes) {
  std::ostringstream os;
  write_prefixes(os, prefixes);
  write_graph_body(os, g, prefixes, "");
  return os.str();
}

std::string serialize_trig(const Dataset& d,
                           const std::map<std::string, std::string>& prefixes) {
  std::ostringstream os;
  write_prefixes(os, prefixes);
  write_graph_body(os, d.default_graph(), prefixes, "");
  bool first = d.default_graph().empty();
  for (const auto& [iri, g] : d.named()) {
    if (!first) os << "\n";
    first = false;
    os << "GRAPH " << render_iri(iri, prefixes) << " {\n";
    write_graph_body(os, *g, prefixes, "  ");
    os << "}\n";
  }
  return os.str();
}

}  // namespace shaclds
