#include "shaclds/vocab.hpp"

namespace shaclds::vocab {

#define SHACLDS_VOCAB_TERM(fn, nsp, local)                            \
  const Term& fn() {                                                  \
    static const Term t = Term::iri(std::string(ns::nsp) + local);    \
    return t;                                                         \
  }

SHACLDS_VOCAB_TERM(rdf_type, rdf, "type")
SHACLDS_VOCAB_TERM(rdf_first, rdf, "first")
SHACLDS_VOCAB_TERM(rdf_rest, rdf, "rest")
SHACLDS_VOCAB_TERM(rdf_nil, rdf, "nil")
SHACLDS_VOCAB_TERM(rdf_langString, rdf, "langString")
SHACLDS_VOCAB_TERM(rdfs_subClassOf, rdfs, "subClassOf")
SHACLDS_VOCAB_TERM(rdfs_label, rdfs, "label")
SHACLDS_VOCAB_TERM(xsd_string, xsd, "string")
SHACLDS_VOCAB_TERM(xsd_integer, xsd, "integer")
SHACLDS_VOCAB_TERM(xsd_decimal, xsd, "decimal")
SHACLDS_VOCAB_TERM(xsd_boolean, xsd, "boolean")

SHACLDS_VOCAB_TERM(sh_NodeShape, sh, "NodeShape")
SHACLDS_VOCAB_TERM(sh_PropertyShape, sh, "PropertyShape")
SHACLDS_VOCAB_TERM(sh_property, sh, "property")
SHACLDS_VOCAB_TERM(sh_path, sh, "path")
SHACLDS_VOCAB_TERM(sh_inversePath, sh, "inversePath")
SHACLDS_VOCAB_TERM(sh_datatype, sh, "datatype")
SHACLDS_VOCAB_TERM(sh_pattern, sh, "pattern")
SHACLDS_VOCAB_TERM(sh_flags, sh, "flags")
SHACLDS_VOCAB_TERM(sh_minCount, sh, "minCount")
SHACLDS_VOCAB_TERM(sh_maxCount, sh, "maxCount")
SHACLDS_VOCAB_TERM(sh_class, sh, "class")
SHACLDS_VOCAB_TERM(sh_nodeKind, sh, "nodeKind")
SHACLDS_VOCAB_TERM(sh_in, sh, "in")
SHACLDS_VOCAB_TERM(sh_or, sh, "or")
SHACLDS_VOCAB_TERM(sh_not, sh, "not")
SHACLDS_VOCAB_TERM(sh_node, sh, "node")
SHACLDS_VOCAB_TERM(sh_sparql, sh, "sparql")
SHACLDS_VOCAB_TERM(sh_SPARQLConstraint, sh, "SPARQLConstraint")
SHACLDS_VOCAB_TERM(sh_select, sh, "select")
SHACLDS_VOCAB_TERM(sh_prefixes, sh, "prefixes")
SHACLDS_VOCAB_TERM(sh_message, sh, "message")
SHACLDS_VOCAB_TERM(sh_severity, sh, "severity")
SHACLDS_VOCAB_TERM(sh_deactivated, sh, "deactivated")
SHACLDS_VOCAB_TERM(sh_targetClass, sh, "targetClass")
SHACLDS_VOCAB_TERM(sh_targetNode, sh, "targetNode")
SHACLDS_VOCAB_TERM(sh_targetSubjectsOf, sh, "targetSubjectsOf")
SHACLDS_VOCAB_TERM(sh_targetObjectsOf, sh, "targetObjectsOf")

SHACLDS_VOCAB_TERM(sh_Violation, sh, "Violation")
SHACLDS_VOCAB_TERM(sh_Warning, sh, "Warning")
SHACLDS_VOCAB_TERM(sh_Info, sh, "Info")
SHACLDS_VOCAB_TERM(sh_IRI, sh, "IRI")
SHACLDS_VOCAB_TERM(sh_BlankNode, sh, "BlankNode")
SHACLDS_VOCAB_TERM(sh_Literal, sh, "Literal")
SHACLDS_VOCAB_TERM(sh_BlankNodeOrIRI, sh, "BlankNodeOrIRI")
SHACLDS_VOCAB_TERM(sh_BlankNodeOrLiteral, sh, "BlankNodeOrLiteral")
SHACLDS_VOCAB_TERM(sh_IRIOrLiteral, sh, "IRIOrLiteral")

SHACLDS_VOCAB_TERM(sh_ValidationReport, sh, "ValidationReport")
SHACLDS_VOCAB_TERM(sh_ValidationResult, sh, "ValidationResult")
SHACLDS_VOCAB_TERM(sh_conforms, sh, "conforms")
SHACLDS_VOCAB_TERM(sh_result, sh, "result")
SHACLDS_VOCAB_TERM(sh_focusNode, sh, "focusNode")
SHACLDS_VOCAB_TERM(sh_resultPath, sh, "resultPath")
SHACLDS_VOCAB_TERM(sh_value, sh, "value")
SHACLDS_VOCAB_TERM(sh_sourceShape, sh, "sourceShape")
SHACLDS_VOCAB_TERM(sh_sourceConstraintComponent, sh, "sourceConstraintComponent")
SHACLDS_VOCAB_TERM(sh_resultSeverity, sh, "resultSeverity")
SHACLDS_VOCAB_TERM(sh_resultMessage, sh, "resultMessage")

SHACLDS_VOCAB_TERM(sh_DatatypeConstraintComponent, sh, "DatatypeConstraintComponent")
SHACLDS_VOCAB_TERM(sh_PatternConstraintComponent, sh, "PatternConstraintComponent")
SHACLDS_VOCAB_TERM(sh_MinCountConstraintComponent, sh, "MinCountConstraintComponent")
SHACLDS_VOCAB_TERM(sh_MaxCountConstraintComponent, sh, "MaxCountConstraintComponent")
SHACLDS_VOCAB_TERM(sh_ClassConstraintComponent, sh, "ClassConstraintComponent")
SHACLDS_VOCAB_TERM(sh_NodeKindConstraintComponent, sh, "NodeKindConstraintComponent")
SHACLDS_VOCAB_TERM(sh_InConstraintComponent, sh, "InConstraintComponent")
SHACLDS_VOCAB_TERM(sh_OrConstraintComponent, sh, "OrConstraintComponent")
SHACLDS_VOCAB_TERM(sh_NotConstraintComponent, sh, "NotConstraintComponent")
SHACLDS_VOCAB_TERM(sh_NodeConstraintComponent, sh, "NodeConstraintComponent")
SHACLDS_VOCAB_TERM(sh_SPARQLConstraintComponent, sh, "SPARQLConstraintComponent")

SHACLDS_VOCAB_TERM(shds_targetGraph, shds, "targetGraph")
SHACLDS_VOCAB_TERM(shds_targetGraphPattern, shds, "targetGraphPattern")
SHACLDS_VOCAB_TERM(shds_targetGraphCombination, shds, "targetGraphCombination")
SHACLDS_VOCAB_TERM(shds_or, shds, "or")
SHACLDS_VOCAB_TERM(shds_and, shds, "and")
SHACLDS_VOCAB_TERM(shds_minus, shds, "minus")
SHACLDS_VOCAB_TERM(shds_all, shds, "all")
SHACLDS_VOCAB_TERM(shds_default, shds, "default")
SHACLDS_VOCAB_TERM(shds_focusGraph, shds, "focusGraph")
SHACLDS_VOCAB_TERM(shds_sourceShapeGraph, shds, "sourceShapeGraph")

#undef SHACLDS_VOCAB_TERM

}  // namespace shaclds::vocab
