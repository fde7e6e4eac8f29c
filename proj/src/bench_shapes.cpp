#include "shaclds/bench.hpp"

#include <json.hpp>

#include <sstream>

namespace shaclds {

namespace {

const char* kPrefixBlock = R"ttl(@prefix era: <http://data.europa.eu/949/> .
@prefix era-g: <http://data.europa.eu/949/graph/> .
@prefix era-rinf: <http://data.europa.eu/949/graph/rinf/> .
@prefix era-315: <http://data.europa.eu/949/graph/v3-1-5/> .
@prefix era-sh: <http://data.europa.eu/949/shapes/> .
@prefix sh: <http://www.w3.org/ns/shacl#> .
@prefix shds: <http://www.w3id.org/shacl-ds#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
)ttl";

// Core shapes shared by every configuration.
const char* kCommonShapes = R"ttl(
era-sh:OperationalPointShape a sh:NodeShape ;
  sh:targetClass era:OperationalPoint ;
  sh:property era-sh:MaximumTrainCurrent ;
  sh:property era-sh:OperationalPointLabel ;
  sh:property era-sh:NotApplicableProperty .

era-sh:MaximumTrainCurrent a sh:PropertyShape ;
  rdfs:comment "Indication of the maximum allowable train current"@en ;
  sh:path era:maxTrainCurrent ;
  sh:datatype xsd:integer ;
  sh:pattern "^([1-9]\\d{0,3}|0)$" ;
  sh:maxCount 1 ;
  sh:severity sh:Violation ;
  sh:message "maxTrainCurrent (1.1.1.2.2.2): at most one integer between 0 and 9999"@en .

era-sh:OperationalPointLabel a sh:PropertyShape ;
  sh:path era:opName ;
  sh:datatype xsd:string ;
  sh:message "opName values are strings"@en .

era-sh:ETCSShape a sh:NodeShape ;
  sh:targetClass era:OperationalPoint ;
  sh:sparql era-sh:EtcsMVersionSKOS .

era-sh:SectionShape a sh:NodeShape ;
  sh:targetClass era:Section ;
  sh:property era-sh:SectionTrackRef ;
  sh:property era-sh:SectionGauge .

era-sh:SectionTrackRef a sh:PropertyShape ;
  sh:path era:trackRef ;
  sh:minCount 1 ;
  sh:message "sections must reference at least one track"@en .

era-sh:SectionGauge a sh:PropertyShape ;
  sh:path era:gaugeCode ;
  sh:maxCount 1 ;
  sh:message "sections carry at most one gauge code"@en .
)ttl";

// Original constraints: bare lookups that expect reference triples in the
// focus graph.
const char* kOriginalConstraints = R"ttl(
era-sh:NotApplicableProperty a sh:PropertyShape ;
  sh:path era:notApplicable ;
  sh:or ( [ sh:class owl:ObjectProperty ] [ sh:class owl:DatatypeProperty ] ) ;
  sh:message "notApplicable values must be declared object or datatype properties"@en .

era-sh:EtcsMVersionSKOS a sh:SPARQLConstraint ;
  sh:message "etcsMVersion values must belong to the declared concept scheme"@en ;
  sh:select """
PREFIX era: <http://data.europa.eu/949/>
PREFIX skos: <http://www.w3.org/2004/02/skos/core#>
SELECT $this (?concept AS ?value) (era:etcsMVersion AS ?path)
WHERE {
  $this era:etcsMVersion ?concept .
  era:etcsMVersion era:inSkosConceptScheme ?conceptScheme .
  FILTER NOT EXISTS { ?concept skos:inScheme ?conceptScheme . }
}
""" .
)ttl";

// Target-Strategy rewrites: cross-graph lookups pinned with GRAPH clauses.
const char* kRewrittenConstraints = R"ttl(
era-sh:NotApplicableProperty a sh:PropertyShape ;
  sh:path era:notApplicable ;
  sh:sparql era-sh:NotApplicableCheck ;
  sh:message "notApplicable values must be declared object or datatype properties"@en .

era-sh:NotApplicableCheck a sh:SPARQLConstraint ;
  sh:message "notApplicable values must be declared object or datatype properties"@en ;
  sh:select """
PREFIX era: <http://data.europa.eu/949/>
PREFIX era-g: <http://data.europa.eu/949/graph/>
PREFIX owl: <http://www.w3.org/2002/07/owl#>
SELECT $this (?property AS ?value) (era:notApplicable AS ?path)
WHERE {
  $this era:notApplicable ?property .
  FILTER NOT EXISTS {
    { GRAPH era-g:ontology { ?property a owl:ObjectProperty . } }
    UNION
    { GRAPH era-g:ontology { ?property a owl:DatatypeProperty . } }
  }
}
""" .

era-sh:EtcsMVersionSKOS a sh:SPARQLConstraint ;
  sh:message "etcsMVersion values must belong to the declared concept scheme"@en ;
  sh:select """
PREFIX era: <http://data.europa.eu/949/>
PREFIX era-g: <http://data.europa.eu/949/graph/>
PREFIX skos: <http://www.w3.org/2004/02/skos/core#>
SELECT $this (?concept AS ?value) (era:etcsMVersion AS ?path)
WHERE {
  $this era:etcsMVersion ?concept .
  GRAPH era-g:ontology { era:etcsMVersion era:inSkosConceptScheme ?conceptScheme . }
  FILTER NOT EXISTS { GRAPH era-g:skos { ?concept skos:inScheme ?conceptScheme . } }
}
""" .
)ttl";

const char* kExtraShapesGraphs = R"ttl(
era-sh:sg-ont shds:targetGraphPattern ".*/ontology$" .
era-sh:sg-skos shds:targetGraphPattern ".*/skos$" .
era-sh:sg-shacl shds:targetGraphPattern ".*/shacl$" .

GRAPH era-sh:sg-ont {
  era-sh:OntologyPropertyShape a sh:NodeShape ;
    sh:targetSubjectsOf era:inSkosConceptScheme ;
    sh:property era-sh:OntologyPropertyLabel .
  era-sh:OntologyPropertyLabel a sh:PropertyShape ;
    sh:path rdfs:label ;
    sh:minCount 1 ;
    sh:message "ontology properties must carry a label"@en .
}

GRAPH era-sh:sg-skos {
  era-sh:ConceptShape a sh:NodeShape ;
    sh:targetClass skos:Concept ;
    sh:property era-sh:ConceptInScheme .
  era-sh:ConceptInScheme a sh:PropertyShape ;
    sh:path skos:inScheme ;
    sh:minCount 1 ;
    sh:message "every concept belongs to a scheme"@en .
}

GRAPH era-sh:sg-shacl {
  era-sh:MetaPropertyShape a sh:NodeShape ;
    sh:targetClass sh:PropertyShape ;
    sh:property era-sh:MetaPropertyPath .
  era-sh:MetaPropertyPath a sh:PropertyShape ;
    sh:path sh:path ;
    sh:maxCount 1 ;
    sh:message "property shapes declare exactly one path"@en .
}
)ttl";

}  // namespace

std::string era_flat_shapes_turtle() {
  std::string out = kPrefixBlock;
  out += kCommonShapes;
  out += kOriginalConstraints;
  return out;
}

std::string era_shapes_dataset_trig(Strategy strategy, bool extra,
                                    const std::vector<std::string>& operator_graph_iris) {
  std::ostringstream os;
  os << kPrefixBlock << "\n";
  if (strategy == Strategy::Target) {
    os << "era-sh:sg-rinf shds:targetGraphPattern \".*/graph/rinf/[A-Z0-9]{4}$\" .\n";
  } else {
    os << "_:refGraphs shds:or ( era-g:ontology era-g:skos era-g:countries "
          "era-g:borders ) .\n";
    for (const auto& op : operator_graph_iris) {
      os << "era-sh:sg-rinf shds:targetGraphCombination [ shds:or ( <" << op
         << "> _:refGraphs ) ] .\n";
    }
  }
  os << "\nGRAPH era-sh:sg-rinf {\n";
  os << kCommonShapes;
  os << (strategy == Strategy::Target ? kRewrittenConstraints : kOriginalConstraints);
  os << "}\n";
  if (extra) os << kExtraShapesGraphs;
  return os.str();
}

std::vector<Term> baseline_graph_names(const std::vector<std::string>& operator_graph_iris) {
  std::vector<Term> names;
  names.reserve(operator_graph_iris.size() + 4);
  for (const auto& op : operator_graph_iris) names.push_back(Term::iri(op));
  const std::string graph_ns = "http://data.europa.eu/949/graph/";
  for (const char* ref : {"ontology", "skos", "countries", "borders"})
    names.push_back(Term::iri(graph_ns + ref));
  return names;
}

// --- ground truth serialization ---

namespace {

using nlohmann::json;

json counts_to_json(const std::map<std::string, std::size_t>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

json nested_to_json(const std::map<std::string, std::map<std::string, std::size_t>>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = counts_to_json(v);
  return j;
}

std::map<std::string, std::size_t> counts_from_json(const json& j) {
  std::map<std::string, std::size_t> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value().get<std::size_t>();
  return out;
}

std::map<std::string, std::map<std::string, std::size_t>> nested_from_json(const json& j) {
  std::map<std::string, std::map<std::string, std::size_t>> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = counts_from_json(it.value());
  return out;
}

std::map<std::string, std::size_t> sum_nested(
    const std::map<std::string, std::map<std::string, std::size_t>>& nested) {
  std::map<std::string, std::size_t> out;
  for (const auto& [graph, counts] : nested) {
    for (const auto& [shape, n] : counts) out[shape] += n;
  }
  return out;
}

std::size_t sum_counts(const std::map<std::string, std::size_t>& m) {
  std::size_t n = 0;
  for (const auto& [k, v] : m) n += v;
  return n;
}

}  // namespace

std::map<std::string, std::size_t> GroundTruth::target_by_shape() const {
  return sum_nested(target_by_graph);
}
std::map<std::string, std::size_t> GroundTruth::combo_by_shape() const {
  return sum_nested(combo_by_graph);
}
std::size_t GroundTruth::target_total() const { return sum_counts(target_by_shape()); }
std::size_t GroundTruth::combo_total() const { return sum_counts(combo_by_shape()); }
std::size_t GroundTruth::baseline_total() const { return sum_counts(baseline_by_shape); }
std::size_t GroundTruth::full_total() const { return sum_counts(full_by_shape); }
std::size_t GroundTruth::extra_total() const { return sum_counts(sum_nested(extra_by_graph)); }

std::string GroundTruth::to_json() const {
  json j;
  j["target_by_graph"] = nested_to_json(target_by_graph);
  j["combo_by_graph"] = nested_to_json(combo_by_graph);
  j["baseline_by_shape"] = counts_to_json(baseline_by_shape);
  j["full_by_shape"] = counts_to_json(full_by_shape);
  j["extra_by_graph"] = nested_to_json(extra_by_graph);
  j["totals"] = {{"target", target_total()},
                 {"combo", combo_total()},
                 {"baseline", baseline_total()},
                 {"full", full_total()},
                 {"extra", extra_total()}};
  return j.dump(2) + "\n";
}

GroundTruth GroundTruth::from_json(const std::string& text) {
  json j = json::parse(text);
  GroundTruth gt;
  gt.target_by_graph = nested_from_json(j.at("target_by_graph"));
  gt.combo_by_graph = nested_from_json(j.at("combo_by_graph"));
  gt.baseline_by_shape = counts_from_json(j.at("baseline_by_shape"));
  gt.full_by_shape = counts_from_json(j.at("full_by_shape"));
  gt.extra_by_graph = nested_from_json(j.at("extra_by_graph"));
  return gt;
}

// --- config files ---

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw BenchConfigError("invalid boolean for " + key + ": " + v);
}

long long parse_int(const std::string& v, const std::string& key) {
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    throw BenchConfigError("invalid integer for " + key + ": " + v);
  }
}

// Applies one key=value pair; returns false when the key is unknown.
bool apply_generator_key(GeneratorConfig& g, const std::string& key,
                         const std::string& value) {
  if (key == "seed") {
    g.seed = static_cast<std::uint64_t>(parse_int(value, key));
  } else if (key == "operators") {
    g.operator_count = static_cast<int>(parse_int(value, key));
  } else if (key == "triples_per_operator") {
    g.triples_per_operator = static_cast<int>(parse_int(value, key));
  } else if (key == "violations") {
    g.violations.clear();
    if (!trim(value).empty()) {
      for (const auto& item : split(value, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
          throw BenchConfigError("violations entries are kind:count, got " + item);
        g.violations[trim(item.substr(0, colon))] =
            static_cast<int>(parse_int(trim(item.substr(colon + 1)), key));
      }
    }
  } else if (key == "shared_triples") {
    g.shared_triple_count = static_cast<int>(parse_int(value, key));
  } else if (key == "divergence") {
    g.divergence_missing_reference = false;
    g.divergence_conflicting_values = false;
    g.divergence_spoof = false;
    if (!trim(value).empty()) {
      for (const auto& flag : split(value, ',')) {
        if (flag == "missing_ref") g.divergence_missing_reference = true;
        else if (flag == "conflicting_values") g.divergence_conflicting_values = true;
        else if (flag == "spoof") g.divergence_spoof = true;
        else throw BenchConfigError("unknown divergence flag: " + flag);
      }
    }
  } else if (key == "full_extras") {
    g.full_extras = parse_bool(value, key);
  } else {
    return false;
  }
  return true;
}

void for_each_pair(const std::string& text,
                   const std::function<void(const std::string&, const std::string&)>& fn) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw BenchConfigError("config lines are key = value, got: " + t);
    fn(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

}  // namespace

GeneratorConfig parse_generator_config(const std::string& text) {
  GeneratorConfig g;
  for_each_pair(text, [&](const std::string& key, const std::string& value) {
    if (!apply_generator_key(g, key, value))
      throw BenchConfigError("unknown generator config key: " + key);
  });
  g.validate();
  return g;
}

BenchFileConfig parse_bench_config(const std::string& text) {
  BenchFileConfig c;
  for_each_pair(text, [&](const std::string& key, const std::string& value) {
    if (apply_generator_key(c.generator, key, value)) return;
    if (key == "repeats") {
      c.repeats = static_cast<int>(parse_int(value, key));
      if (c.repeats < 1) throw BenchConfigError("repeats must be >= 1");
    } else if (key == "warmup") {
      c.warmup = parse_bool(value, key);
    } else if (key == "parallel") {
      c.parallel = static_cast<int>(parse_int(value, key));
    } else if (key == "data") {
      c.data_file = value;
    } else if (key == "configs") {
      c.configs.clear();
      for (const auto& name : split(value, ','))
        c.configs.push_back(bench_config_from_string(name));
    } else {
      throw BenchConfigError("unknown bench config key: " + key);
    }
  });
  c.generator.validate();
  if (c.configs.empty()) {
    c.configs = {BenchConfigId::ShaclBaseline, BenchConfigId::ShaclFull,
                 BenchConfigId::DsTarget,      BenchConfigId::DsTargetExtra,
                 BenchConfigId::DsCombo,       BenchConfigId::DsComboExtra};
  }
  return c;
}

}  // namespace shaclds
