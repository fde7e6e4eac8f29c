#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace shaclds {

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

/// An RDF term: IRI, blank node, or literal. Immutable value type with a
/// precomputed hash. Literals always carry a datatype IRI; a language tag is
/// present only when the datatype is rdf:langString.
class Term {
public:
  Term() = default;  // empty IRI placeholder; use the factories for real terms

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype_iri);
  static Term literal_lang(std::string lexical, std::string language_tag);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::Blank; }
  bool is_literal() const { return kind_ == TermKind::Literal; }

  /// IRI string, blank label, or literal lexical form depending on kind.
  const std::string& value() const { return value_; }
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }

  std::size_t hash() const { return hash_; }

  /// N-Triples serialization (used for diagnostics, sorting keys, output).
  std::string to_ntriples() const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.hash_ == b.hash_ && a.kind_ == b.kind_ && a.value_ == b.value_ &&
           a.datatype_ == b.datatype_ && a.language_ == b.language_;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.value_ <=> b.value_; c != 0) return c;
    if (auto c = a.datatype_ <=> b.datatype_; c != 0) return c;
    return a.language_ <=> b.language_;
  }

private:
  TermKind kind_ = TermKind::Iri;
  std::string value_;
  std::string datatype_;
  std::string language_;
  std::size_t hash_ = 0;

  void rehash();
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Escape a string per N-Triples rules (quotes, backslashes, control chars).
std::string escape_string_literal(const std::string& s);

}  // namespace shaclds
