#pragma once

#include "shaclds/term.hpp"

namespace shaclds::ns {

inline constexpr const char* rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* sh = "http://www.w3.org/ns/shacl#";
inline constexpr const char* shds = "http://www.w3id.org/shacl-ds#";
inline constexpr const char* skos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr const char* owl = "http://www.w3.org/2002/07/owl#";

}  // namespace shaclds::ns

namespace shaclds::vocab {

// rdf / rdfs / xsd
const Term& rdf_type();
const Term& rdf_first();
const Term& rdf_rest();
const Term& rdf_nil();
const Term& rdf_langString();
const Term& rdfs_subClassOf();
const Term& rdfs_label();
const Term& xsd_string();
const Term& xsd_integer();
const Term& xsd_decimal();
const Term& xsd_boolean();

// SHACL shape vocabulary
const Term& sh_NodeShape();
const Term& sh_PropertyShape();
const Term& sh_property();
const Term& sh_path();
const Term& sh_inversePath();
const Term& sh_datatype();
const Term& sh_pattern();
const Term& sh_flags();
const Term& sh_minCount();
const Term& sh_maxCount();
const Term& sh_class();
const Term& sh_nodeKind();
const Term& sh_in();
const Term& sh_or();
const Term& sh_not();
const Term& sh_node();
const Term& sh_sparql();
const Term& sh_SPARQLConstraint();
const Term& sh_select();
const Term& sh_prefixes();
const Term& sh_message();
const Term& sh_severity();
const Term& sh_deactivated();
const Term& sh_targetClass();
const Term& sh_targetNode();
const Term& sh_targetSubjectsOf();
const Term& sh_targetObjectsOf();

// severities and node kinds
const Term& sh_Violation();
const Term& sh_Warning();
const Term& sh_Info();
const Term& sh_IRI();
const Term& sh_BlankNode();
const Term& sh_Literal();
const Term& sh_BlankNodeOrIRI();
const Term& sh_BlankNodeOrLiteral();
const Term& sh_IRIOrLiteral();

// validation report vocabulary
const Term& sh_ValidationReport();
const Term& sh_ValidationResult();
const Term& sh_conforms();
const Term& sh_result();
const Term& sh_focusNode();
const Term& sh_resultPath();
const Term& sh_value();
const Term& sh_sourceShape();
const Term& sh_sourceConstraintComponent();
const Term& sh_resultSeverity();
const Term& sh_resultMessage();

// constraint components
const Term& sh_DatatypeConstraintComponent();
const Term& sh_PatternConstraintComponent();
const Term& sh_MinCountConstraintComponent();
const Term& sh_MaxCountConstraintComponent();
const Term& sh_ClassConstraintComponent();
const Term& sh_NodeKindConstraintComponent();
const Term& sh_InConstraintComponent();
const Term& sh_OrConstraintComponent();
const Term& sh_NotConstraintComponent();
const Term& sh_NodeConstraintComponent();
const Term& sh_SPARQLConstraintComponent();

// SHACL-DS vocabulary
const Term& shds_targetGraph();
const Term& shds_targetGraphPattern();
const Term& shds_targetGraphCombination();
const Term& shds_or();
const Term& shds_and();
const Term& shds_minus();
const Term& shds_all();
const Term& shds_default();
const Term& shds_focusGraph();
const Term& shds_sourceShapeGraph();

}  // namespace shaclds::vocab
