#include "shaclds/bench.hpp"
#include "shaclds/io.hpp"
#include "shaclds/vocab.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace shaclds {

namespace {

// Namespaces of the generated world (ERA-style).
const std::string kEra = "http://data.europa.eu/949/";
const std::string kGraph = kEra + "graph/";
const std::string kRinfGraph = kGraph + "rinf/";
const std::string kV315Graph = kGraph + "v3-1-5/";
const std::string kShapes = kEra + "shapes/";
const std::string kConcepts = kEra + "concepts/etcs/";

const std::string kOntologyGraph = kGraph + "ontology";
const std::string kSkosGraph = kGraph + "skos";
const std::string kCountriesGraph = kGraph + "countries";
const std::string kBordersGraph = kGraph + "borders";

// shape IRIs referenced by the ground truth
const std::string kShMaxCurrent = kShapes + "MaximumTrainCurrent";
const std::string kShLabel = kShapes + "OperationalPointLabel";
const std::string kShNotApplicable = kShapes + "NotApplicableProperty";
const std::string kShEtcs = kShapes + "ETCSShape";
const std::string kShTrackRef = kShapes + "SectionTrackRef";
const std::string kShGauge = kShapes + "SectionGauge";
const std::string kShOntLabel = kShapes + "OntologyPropertyLabel";
const std::string kShConceptScheme = kShapes + "ConceptInScheme";

Term iri(const std::string& s) { return Term::iri(s); }
Term str_lit(const std::string& s) { return Term::literal(s, vocab::xsd_string().value()); }
Term int_lit(long long v) {
  return Term::literal(std::to_string(v), vocab::xsd_integer().value());
}

const Term& era(const char* local) {
  static std::map<std::string, Term> cache;
  auto it = cache.find(local);
  if (it == cache.end()) it = cache.emplace(local, Term::iri(kEra + local)).first;
  return it->second;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
};

std::vector<std::string> operator_codes(Rng& rng, int count) {
  static const char alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  std::set<std::string> seen;
  std::vector<std::string> codes;
  while (static_cast<int>(codes.size()) < count) {
    std::string code;
    for (int i = 0; i < 4; ++i) code += alphabet[rng.next(36)];
    if (seen.insert(code).second) codes.push_back(code);
  }
  return codes;
}

void add_ontology_triples(Graph& g, const std::string& scheme_iri,
                          const std::string& legacy_prop) {
  Term scheme = iri(scheme_iri);
  g.insert(era("etcsMVersion"), era("inSkosConceptScheme"), scheme);
  g.insert(era("etcsMVersion"), vocab::rdfs_label(), str_lit("etcsMVersion"));
  g.insert(era("lineSpeed"), vocab::rdf_type(), iri(std::string(ns::owl) + "DatatypeProperty"));
  g.insert(era("lineSpeed"), vocab::rdfs_label(), str_lit("lineSpeed"));
  g.insert(era("connectedTo"), vocab::rdf_type(), iri(std::string(ns::owl) + "ObjectProperty"));
  g.insert(era("connectedTo"), vocab::rdfs_label(), str_lit("connectedTo"));
  g.insert(iri(kEra + "StationPoint"), vocab::rdfs_subClassOf(), era("OperationalPoint"));
  // one property left unlabeled; the ontology meta shape reports it
  g.insert(iri(legacy_prop), era("inSkosConceptScheme"), scheme);
}

void add_skos_triples(Graph& g, const std::string& scheme_iri,
                      const std::string& concept_stem, const std::string& orphan) {
  Term scheme = iri(scheme_iri);
  Term skos_concept = iri(std::string(ns::skos) + "Concept");
  Term skos_in_scheme = iri(std::string(ns::skos) + "inScheme");
  Term scheme_class = iri(std::string(ns::skos) + "ConceptScheme");
  g.insert(scheme, vocab::rdf_type(), scheme_class);
  for (int i = 0; i < 3; ++i) {
    Term c = iri(concept_stem + std::to_string(i));
    g.insert(c, vocab::rdf_type(), skos_concept);
    g.insert(c, skos_in_scheme, scheme);
  }
  g.insert(iri(orphan), vocab::rdf_type(), skos_concept);
  g.insert(iri(orphan), vocab::rdfs_label(), str_lit("orphan concept"));
}

void bump(std::map<std::string, std::size_t>& m, const std::string& k, std::size_t n = 1) {
  m[k] += n;
}

}  // namespace

void GeneratorConfig::validate() const {
  if (operator_count < 1) throw BenchConfigError("operator_count must be positive");
  if (triples_per_operator < 1)
    throw BenchConfigError("triples_per_operator must be positive");
  static const std::set<std::string> kinds{"pattern", "maxcount", "datatype", "skos",
                                           "class"};
  for (const auto& [kind, count] : violations) {
    if (!kinds.count(kind))
      throw BenchConfigError("unknown violation kind '" + kind + "'");
    if (count < 0) throw BenchConfigError("violation count must be non-negative");
  }
  if (shared_triple_count < 0) throw BenchConfigError("shared_triple_count must be >= 0");
  if (shared_triple_count > 0 && operator_count < 2)
    throw BenchConfigError("shared triples require at least 2 operator graphs");
  if ((divergence_missing_reference || divergence_conflicting_values) && operator_count < 2)
    throw BenchConfigError("divergence scenarios require at least 2 operator graphs");
}

std::map<std::string, std::string> era_prefixes() {
  return {{"era", kEra},
          {"era-g", kGraph},
          {"era-rinf", kRinfGraph},
          {"era-315", kV315Graph},
          {"era-sh", kShapes},
          {"rdf", ns::rdf},
          {"rdfs", ns::rdfs},
          {"xsd", ns::xsd},
          {"sh", ns::sh},
          {"shds", ns::shds},
          {"skos", ns::skos},
          {"owl", ns::owl}};
}

GeneratedBench generate(const GeneratorConfig& config) {
  config.validate();
  Rng rng(config.seed);
  GeneratedBench out;
  Dataset& data = out.data;
  GroundTruth& gt = out.truth;

  const std::string scheme301 = kConcepts + "Scheme301";
  const std::string scheme315 = kConcepts + "Scheme315";

  // Reference graphs.
  add_ontology_triples(data.named_graph(iri(kOntologyGraph)), scheme301,
                       kEra + "legacyProp301");
  add_skos_triples(data.named_graph(iri(kSkosGraph)), scheme301, kConcepts + "c301_",
                   kConcepts + "orphan301");
  {
    Graph& countries = data.named_graph(iri(kCountriesGraph));
    for (const char* cc : {"BE", "FR", "DE"}) {
      Term c = iri(kEra + "country/" + cc);
      countries.insert(c, vocab::rdf_type(), era("Country"));
      countries.insert(c, vocab::rdfs_label(), str_lit(cc));
    }
    Graph& borders = data.named_graph(iri(kBordersGraph));
    for (int i = 0; i < 3; ++i) {
      Term bp = iri(kEra + "border/bp" + std::to_string(i));
      borders.insert(bp, vocab::rdf_type(), era("BorderPoint"));
      borders.insert(bp, era("inCountry"), iri(kEra + "country/BE"));
    }
  }
  bump(gt.extra_by_graph[kOntologyGraph], kShOntLabel);
  bump(gt.extra_by_graph[kSkosGraph], kShConceptScheme);

  if (config.full_extras) {
    // Duplicate v3.0.1 graphs under the rinf namespace, a v3.1.5 pair with a
    // different concept scheme, three shacl shapes graphs, and metadata.
    Graph& ont_dup = data.named_graph(iri(kRinfGraph + "ontology"));
    add_ontology_triples(ont_dup, scheme301, kEra + "legacyProp301");
    Graph& skos_dup = data.named_graph(iri(kRinfGraph + "skos"));
    add_skos_triples(skos_dup, scheme301, kConcepts + "c301_", kConcepts + "orphan301");
    Graph& ont315 = data.named_graph(iri(kV315Graph + "ontology"));
    add_ontology_triples(ont315, scheme315, kEra + "legacyProp315");
    Graph& skos315 = data.named_graph(iri(kV315Graph + "skos"));
    add_skos_triples(skos315, scheme315, kConcepts + "c315_", kConcepts + "orphan315");
    bump(gt.extra_by_graph[kRinfGraph + "ontology"], kShOntLabel);
    bump(gt.extra_by_graph[kRinfGraph + "skos"], kShConceptScheme);
    bump(gt.extra_by_graph[kV315Graph + "ontology"], kShOntLabel);
    bump(gt.extra_by_graph[kV315Graph + "skos"], kShConceptScheme);

    ParseOutcome shapes_doc = parse_turtle(era_flat_shapes_turtle());
    for (const char* name : {"shacl", "rinf/shacl", "v3-1-5/shacl"}) {
      Graph& sg = data.named_graph(iri(kGraph + name));
      for (const auto& t : shapes_doc.dataset->default_graph().triples()) sg.insert(t);
    }
    Graph& meta = data.named_graph(iri(kRinfGraph + "dataset"));
    Term ds = iri(kEra + "dataset/rinf");
    meta.insert(ds, vocab::rdf_type(), era("DatasetMetadata"));
    meta.insert(ds, vocab::rdfs_label(), str_lit("RINF dataset dump"));
  }

  // Operator graphs.
  std::vector<std::string> codes = operator_codes(rng, config.operator_count);
  std::vector<std::string> op_iris;
  op_iris.reserve(codes.size());
  for (const auto& code : codes) op_iris.push_back(kRinfGraph + code);
  std::sort(op_iris.begin(), op_iris.end());
  std::sort(codes.begin(), codes.end());
  out.operator_graphs = op_iris;

  auto violation_count = [&config](const char* kind) {
    auto it = config.violations.find(kind);
    return it == config.violations.end() ? 0 : it->second;
  };

  for (std::size_t oi = 0; oi < op_iris.size(); ++oi) {
    const std::string& op_iri = op_iris[oi];
    const std::string node_ns = kEra + "rinf/" + codes[oi] + "/";
    Graph& g = data.named_graph(iri(op_iri));
    auto& target_counts = gt.target_by_graph[op_iri];
    auto& combo_counts = gt.combo_by_graph[op_iri];
    auto everywhere = [&](const std::string& shape, std::size_t n = 1) {
      bump(target_counts, shape, n);
      bump(combo_counts, shape, n);
      bump(gt.baseline_by_shape, shape, n);
      bump(gt.full_by_shape, shape, n);
    };

    for (int i = 0; i < violation_count("pattern"); ++i) {
      Term node = iri(node_ns + "pv" + std::to_string(i));
      g.insert(node, vocab::rdf_type(), era("OperationalPoint"));
      g.insert(node, era("maxTrainCurrent"), int_lit(10000 + static_cast<long long>(rng.next(90000))));
      everywhere(kShMaxCurrent);
    }
    for (int i = 0; i < violation_count("maxcount"); ++i) {
      Term node = iri(node_ns + "mc" + std::to_string(i));
      g.insert(node, vocab::rdf_type(), era("OperationalPoint"));
      long long a = 1 + static_cast<long long>(rng.next(4999));
      g.insert(node, era("maxTrainCurrent"), int_lit(a));
      g.insert(node, era("maxTrainCurrent"), int_lit(a + 1));
      everywhere(kShMaxCurrent);
    }
    for (int i = 0; i < violation_count("datatype"); ++i) {
      Term node = iri(node_ns + "dt" + std::to_string(i));
      g.insert(node, vocab::rdf_type(), era("OperationalPoint"));
      g.insert(node, era("opName"), int_lit(static_cast<long long>(rng.next(1000))));
      everywhere(kShLabel);
    }
    for (int i = 0; i < violation_count("skos"); ++i) {
      Term node = iri(node_ns + "sk" + std::to_string(i));
      Term bad = iri(kConcepts + "bad_" + codes[oi] + "_" + std::to_string(i));
      g.insert(node, vocab::rdf_type(), era("OperationalPoint"));
      g.insert(node, era("etcsMVersion"), bad);
      bump(target_counts, kShEtcs);
      bump(combo_counts, kShEtcs);
      bump(gt.baseline_by_shape, kShEtcs);
      // both scheme versions miss the concept in the merged-full view
      bump(gt.full_by_shape, kShEtcs, config.full_extras ? 2 : 1);
    }
    for (int i = 0; i < violation_count("class"); ++i) {
      Term node = iri(node_ns + "cl" + std::to_string(i));
      g.insert(node, vocab::rdf_type(), era("OperationalPoint"));
      g.insert(node, era("notApplicable"),
               iri(kEra + "selfProp_" + codes[oi] + "_" + std::to_string(i)));
      everywhere(kShNotApplicable);
    }

    // Filler operational points up to the per-operator quota.
    int point = 0;
    int etcs_fillers = 0;
    while (g.size() < static_cast<std::size_t>(config.triples_per_operator) || point == 0) {
      Term node = iri(node_ns + "op" + std::to_string(point));
      g.insert(node, vocab::rdf_type(), era("OperationalPoint"));
      g.insert(node, era("opName"), str_lit("OP " + codes[oi] + " " + std::to_string(point)));
      g.insert(node, era("maxTrainCurrent"),
               int_lit(1 + static_cast<long long>(rng.next(9999))));
      if (point < 3) {
        g.insert(node, era("etcsMVersion"),
                 iri(kConcepts + "c301_" + std::to_string(rng.next(3))));
        ++etcs_fillers;
      } else if (point < 5) {
        g.insert(node, era("notApplicable"),
                 point % 2 == 0 ? era("lineSpeed") : era("connectedTo"));
      } else if (point % 7 == 3) {
        g.insert(node, era("inCountry"), iri(kEra + "country/FR"));
      }
      ++point;
    }
    if (config.full_extras) {
      // every concept-bearing node gains one error from the extra scheme
      bump(gt.full_by_shape, kShEtcs, static_cast<std::size_t>(etcs_fillers));
    }
  }

  // Violating triples shared by operator pairs: identical triples in two
  // graphs, reported once per operator and once after merge/dedup.
  for (int s = 0; s < config.shared_triple_count; ++s) {
    const std::string& a = op_iris[s % op_iris.size()];
    const std::string& b = op_iris[(s + 1) % op_iris.size()];
    Term node = iri(kEra + "rinf/shared/pt" + std::to_string(s));
    Term value = int_lit(77000 + s);
    for (const std::string* target : {&a, &b}) {
      Graph& g = data.named_graph(iri(*target));
      g.insert(node, vocab::rdf_type(), era("OperationalPoint"));
      g.insert(node, era("maxTrainCurrent"), value);
      bump(gt.target_by_graph[*target], kShMaxCurrent);
      bump(gt.combo_by_graph[*target], kShMaxCurrent);
    }
    bump(gt.baseline_by_shape, kShMaxCurrent);
    bump(gt.full_by_shape, kShMaxCurrent);
  }

  // Cross-operator divergences (the Swiss-operator scenarios).
  if (config.divergence_missing_reference) {
    const std::string& x = op_iris[0];
    const std::string& y = op_iris[1];
    Term section = iri(kEra + "rinf/shared/section_ref");
    Term track = iri(kEra + "rinf/shared/track1");
    Graph& gx = data.named_graph(iri(x));
    gx.insert(section, vocab::rdf_type(), era("Section"));
    gx.insert(section, era("trackRef"), track);
    gx.insert(section, era("gaugeCode"), str_lit("G1"));
    Graph& gy = data.named_graph(iri(y));
    gy.insert(section, vocab::rdf_type(), era("Section"));
    gy.insert(section, era("gaugeCode"), str_lit("G1"));
    // per-operator: Y misses the reference; merged: borrowed from X
    bump(gt.target_by_graph[y], kShTrackRef);
    bump(gt.combo_by_graph[y], kShTrackRef);
  }
  if (config.divergence_conflicting_values) {
    const std::string& x = op_iris[0];
    const std::string& y = op_iris[1];
    Term section = iri(kEra + "rinf/shared/section_gauge");
    Term track = iri(kEra + "rinf/shared/track2");
    Graph& gx = data.named_graph(iri(x));
    gx.insert(section, vocab::rdf_type(), era("Section"));
    gx.insert(section, era("trackRef"), track);
    gx.insert(section, era("gaugeCode"), str_lit("GA"));
    Graph& gy = data.named_graph(iri(y));
    gy.insert(section, vocab::rdf_type(), era("Section"));
    gy.insert(section, era("trackRef"), track);
    gy.insert(section, era("gaugeCode"), str_lit("GB"));
    // per-operator: one value each; merged: two values on a maxCount-1 path
    bump(gt.baseline_by_shape, kShGauge);
    bump(gt.full_by_shape, kShGauge);
  }
  if (config.divergence_spoof) {
    const std::string& z = op_iris.back();
    Graph& gz = data.named_graph(iri(z));
    Term node = iri(kEra + "rinf/" + codes.back() + "/spoofpoint");
    Term concept = iri(kConcepts + "spoofed_" + codes.back());
    gz.insert(node, vocab::rdf_type(), era("OperationalPoint"));
    gz.insert(node, era("etcsMVersion"), concept);
    // the spoof: an operator-supplied membership triple in the operator graph
    gz.insert(concept, iri(std::string(ns::skos) + "inScheme"), iri(scheme301));
    // GRAPH-pinned lookup ignores the spoof; merged views accept it
    bump(gt.target_by_graph[z], kShEtcs);
    if (config.full_extras) bump(gt.full_by_shape, kShEtcs);  // misses scheme315
  }

  return out;
}

}  // namespace shaclds
