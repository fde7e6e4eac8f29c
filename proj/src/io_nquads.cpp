#include "shaclds/io.hpp"
#include "shaclds/vocab.hpp"

#include <atomic>
#include <cctype>
#include <stdexcept>

namespace shaclds {

namespace {

std::atomic<std::uint64_t> g_nq_document_counter{0};

struct LineError {
  std::size_t column;
  std::string message;
};

/// Scanner for one physical N-Quads line.
class LineScanner {
public:
  LineScanner(std::string_view line, const std::string& doc_prefix)
      : line_(line), doc_prefix_(doc_prefix) {}

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  bool at_comment_or_end() {
    skip_ws();
    return pos_ >= line_.size() || line_[pos_] == '#';
  }

  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& msg) const { throw LineError{pos_ + 1, msg}; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < line_.size() ? line_[pos_ + ahead] : '\0';
  }
  char get() {
    if (pos_ >= line_.size()) fail("unexpected end of line");
    return line_[pos_++];
  }

  Term parse_term() {
    skip_ws();
    char c = peek();
    if (c == '<') return parse_iri();
    if (c == '_') return parse_blank();
    if (c == '"') return parse_literal();
    fail("expected term");
  }

  Term parse_iri() {
    std::size_t start = column();
    get();  // '<'
    std::string iri;
    for (;;) {
      if (pos_ >= line_.size()) throw LineError{start, "unterminated IRI"};
      char ch = get();
      if (ch == '>') break;
      if (ch == '\\') {
        char kind = get();
        int len = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
        if (len == 0) throw LineError{start, "invalid IRI escape"};
        iri += decode_codepoint(read_hex(len, start));
      } else if (ch == ' ' || ch == '\t' || ch == '<' || ch == '"') {
        throw LineError{start, std::string("invalid character '") + ch + "' in IRI"};
      } else {
        iri += ch;
      }
    }
    try {
      return Term::iri(iri);
    } catch (const std::exception& e) {
      throw LineError{start, e.what()};
    }
  }

  Term parse_blank() {
    std::size_t start = column();
    if (get() != '_' || get() != ':') throw LineError{start, "expected blank node"};
    std::string label;
    while (pos_ < line_.size()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
        label += get();
      } else {
        break;
      }
    }
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    if (label.empty()) throw LineError{start, "empty blank node label"};
    return Term::blank(doc_prefix_ + label);
  }

  Term parse_literal() {
    std::size_t start = column();
    get();  // '"'
    std::string lex;
    for (;;) {
      if (pos_ >= line_.size()) throw LineError{start, "unterminated string"};
      char ch = get();
      if (ch == '"') break;
      if (ch == '\\') {
        char e = get();
        switch (e) {
          case 't': lex += '\t'; break;
          case 'b': lex += '\b'; break;
          case 'n': lex += '\n'; break;
          case 'r': lex += '\r'; break;
          case 'f': lex += '\f'; break;
          case '"': lex += '"'; break;
          case '\'': lex += '\''; break;
          case '\\': lex += '\\'; break;
          case 'u': lex += decode_codepoint(read_hex(4, start)); break;
          case 'U': lex += decode_codepoint(read_hex(8, start)); break;
          default: throw LineError{start, std::string("invalid escape \\") + e};
        }
      } else {
        lex += ch;
      }
    }
    if (peek() == '@') {
      get();
      std::string tag;
      while (pos_ < line_.size()) {
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') tag += get();
        else break;
      }
      if (tag.empty()) fail("empty language tag");
      return Term::literal_lang(lex, tag);
    }
    if (peek() == '^' && peek(1) == '^') {
      get();
      get();
      if (peek() != '<') fail("expected datatype IRI");
      Term dt = parse_iri();
      if (dt == vocab::rdf_langString()) fail("rdf:langString requires a language tag");
      return Term::literal(lex, dt.value());
    }
    return Term::literal(lex, vocab::xsd_string().value());
  }

private:
  std::string_view line_;
  const std::string& doc_prefix_;
  std::size_t pos_ = 0;

  std::uint32_t read_hex(int len, std::size_t errcol) {
    std::uint32_t cp = 0;
    for (int i = 0; i < len; ++i) {
      char h = get();
      cp <<= 4;
      if (h >= '0' && h <= '9') cp |= static_cast<std::uint32_t>(h - '0');
      else if (h >= 'a' && h <= 'f') cp |= static_cast<std::uint32_t>(h - 'a' + 10);
      else if (h >= 'A' && h <= 'F') cp |= static_cast<std::uint32_t>(h - 'A' + 10);
      else throw LineError{errcol, "invalid hex digit in escape"};
    }
    return cp;
  }

  static std::string decode_codepoint(std::uint32_t cp) {
    std::string out;
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
  }
};

}  // namespace

ParseOutcome parse_nquads(std::string_view text) {
  ParseOutcome out;
  Dataset dataset;
  std::string doc_prefix =
      "n" + std::to_string(g_nq_document_counter.fetch_add(1)) + "_";
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    std::size_t next = end + 1;
    try {
      LineScanner sc(line, doc_prefix);
      if (!sc.at_comment_or_end()) {
        Term s = sc.parse_term();
        if (s.is_literal()) sc.fail("subject must be an IRI or blank node");
        Term p = sc.parse_term();
        if (!p.is_iri()) sc.fail("predicate must be an IRI");
        Term o = sc.parse_term();
        sc.skip_ws();
        std::optional<Term> g;
        if (sc.peek() != '.') {
          Term gt = sc.parse_term();
          if (!gt.is_iri()) sc.fail("graph label must be an IRI");
          g = gt;
          sc.skip_ws();
        }
        if (sc.peek() != '.') sc.fail("expected '.'");
        sc.get();
        if (!sc.at_comment_or_end()) sc.fail("trailing characters after '.'");
        dataset.add({std::move(s), std::move(p), std::move(o), std::move(g)});
      }
    } catch (const LineError& e) {
      out.diagnostics.push_back({line_no, e.column, e.message});
      return out;
    } catch (const std::exception& e) {
      out.diagnostics.push_back({line_no, 1, e.what()});
      return out;
    }
    if (next > text.size()) break;
    pos = next;
  }
  out.dataset = std::move(dataset);
  return out;
}

}  // namespace shaclds
