#include "shaclds/term.hpp"
#include "shaclds/vocab.hpp"

#include <stdexcept>

namespace shaclds {

namespace {

inline std::size_t fnv1a(std::size_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= 0xFF;  // field separator
  h *= 1099511628211ULL;
  return h;
}

bool has_whitespace(const std::string& s) {
  for (unsigned char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') return true;
  }
  return false;
}

}  // namespace

void Term::rehash() {
  std::size_t h = 1469598103934665603ULL;
  h ^= static_cast<std::size_t>(kind_);
  h *= 1099511628211ULL;
  h = fnv1a(h, value_);
  h = fnv1a(h, datatype_);
  h = fnv1a(h, language_);
  hash_ = h;
}

Term Term::iri(std::string value) {
  if (value.empty() || has_whitespace(value))
    throw std::invalid_argument("invalid IRI: '" + value + "'");
  Term t;
  t.kind_ = TermKind::Iri;
  t.value_ = std::move(value);
  t.rehash();
  return t;
}

Term Term::blank(std::string label) {
  if (label.empty()) throw std::invalid_argument("empty blank node label");
  Term t;
  t.kind_ = TermKind::Blank;
  t.value_ = std::move(label);
  t.rehash();
  return t;
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
  if (datatype_iri.empty()) datatype_iri = vocab::xsd_string().value();
  if (datatype_iri == vocab::rdf_langString().value())
    throw std::invalid_argument("rdf:langString literal requires a language tag");
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  t.datatype_ = std::move(datatype_iri);
  t.rehash();
  return t;
}

Term Term::literal_lang(std::string lexical, std::string language_tag) {
  if (language_tag.empty()) throw std::invalid_argument("empty language tag");
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  t.datatype_ = vocab::rdf_langString().value();
  t.language_ = std::move(language_tag);
  t.rehash();
  return t;
}

std::string escape_string_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20) {
          static const char* hex = "0123456789ABCDEF";
          out += "\\u00";
          out += hex[(c >> 4) & 0xF];
          out += hex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string Term::to_ntriples() const {
  switch (kind_) {
    case TermKind::Iri: return "<" + value_ + ">";
    case TermKind::Blank: return "_:" + value_;
    case TermKind::Literal: {
      std::string out = "\"" + escape_string_literal(value_) + "\"";
      if (!language_.empty()) {
        out += "@" + language_;
      } else if (datatype_ != vocab::xsd_string().value()) {
        out += "^^<" + datatype_ + ">";
      }
      return out;
    }
  }
  return {};
}

}  // namespace shaclds
