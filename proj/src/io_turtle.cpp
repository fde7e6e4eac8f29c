#include "shaclds/io.hpp"
#include "shaclds/vocab.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shaclds {

std::string Diagnostic::to_string() const {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  return os.str();
}

namespace {

std::atomic<std::uint64_t> g_document_counter{0};

struct ParserError {
  std::size_t line;
  std::size_t column;
  std::string message;
};

bool has_scheme(const std::string& iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return false;
  }
  return false;
}

std::string resolve_iri(const std::string& rel, const std::string& base) {
  if (has_scheme(rel)) return rel;
  if (base.empty()) throw std::invalid_argument("relative IRI without base: " + rel);
  if (rel.empty()) return base;
  if (rel[0] == '#') {
    auto hash = base.find('#');
    return (hash == std::string::npos ? base : base.substr(0, hash)) + rel;
  }
  auto scheme_end = base.find(':');
  if (rel.rfind("//", 0) == 0) return base.substr(0, scheme_end + 1) + rel;
  if (rel[0] == '/') {
    auto auth = base.find("//");
    std::size_t path_start = auth == std::string::npos
                                 ? scheme_end + 1
                                 : base.find('/', auth + 2);
    if (path_start == std::string::npos) path_start = base.size();
    return base.substr(0, path_start) + rel;
  }
  auto slash = base.rfind('/');
  if (slash == std::string::npos || slash < scheme_end) return base + "/" + rel;
  return base.substr(0, slash + 1) + rel;
}

/// Recursive-descent parser for the Turtle subset; TriG mode adds graph
/// blocks. Throws ParserError, converted to a diagnostic by the entry points.
class TurtleParser {
public:
  TurtleParser(std::string_view text, std::string base, bool trig)
      : text_(text), base_(std::move(base)), trig_(trig) {
    doc_prefix_ = "d" + std::to_string(g_document_counter.fetch_add(1)) + "_";
  }

  ParseOutcome run() {
    ParseOutcome out;
    try {
      parse_document();
      out.dataset = std::move(dataset_);
      out.prefixes = prefixes_;
    } catch (const ParserError& e) {
      out.diagnostics.push_back({e.line, e.column, e.message});
    } catch (const std::exception& e) {
      out.diagnostics.push_back({line_, column(), e.what()});
    }
    return out;
  }

private:
  std::string_view text_;
  std::string base_;
  bool trig_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  Dataset dataset_;
  std::map<std::string, std::string> prefixes_;
  std::string doc_prefix_;
  std::size_t anon_counter_ = 0;
  Graph* current_graph_ = nullptr;  // null = default graph

  std::size_t column() const { return pos_ - line_start_ + 1; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParserError{line_, column(), msg};
  }
  [[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& msg) const {
    throw ParserError{line, col, msg};
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      line_start_ = pos_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else {
        break;
      }
    }
  }

  bool try_punct(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      get();
      return true;
    }
    return false;
  }

  void expect_punct(char c) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool keyword_ahead(const char* kw) {
    skip_ws();
    std::size_t i = 0;
    while (kw[i]) {
      char c = peek(i);
      if (std::toupper(static_cast<unsigned char>(c)) != kw[i]) return false;
      ++i;
    }
    char after = peek(i);
    return !(std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':');
  }

  void consume_keyword(const char* kw) {
    for (std::size_t i = 0; kw[i]; ++i) get();
  }

  // --- document structure ---

  void parse_document() {
    for (;;) {
      skip_ws();
      if (eof()) break;
      if (peek() == '@') {
        parse_at_directive();
      } else if (keyword_ahead("PREFIX")) {
        consume_keyword("PREFIX");
        parse_prefix_body(false);
      } else if (trig_ && keyword_ahead("GRAPH")) {
        consume_keyword("GRAPH");
        parse_graph_block(parse_graph_name());
      } else {
        // Either a bare TriG graph block (iri { ... }) or a statement.
        if (trig_ && graph_block_ahead()) {
          parse_graph_block(parse_graph_name());
        } else {
          parse_triples();
          expect_punct('.');
        }
      }
    }
  }

  void parse_at_directive() {
    get();  // '@'
    std::string word;
    while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) word += get();
    if (word == "prefix") {
      parse_prefix_body(true);
    } else if (word == "base") {
      fail("@base is not supported");
    } else {
      fail("unknown directive @" + word);
    }
  }

  void parse_prefix_body(bool requires_dot) {
    skip_ws();
    std::string prefix = parse_pname_ns();
    skip_ws();
    std::string iri = parse_iriref();
    prefixes_[prefix] = iri;
    if (requires_dot) expect_punct('.');
  }

  // A graph block starts with an IRI or prefixed name followed by '{'.
  bool graph_block_ahead() {
    std::size_t save_pos = pos_, save_line = line_, save_ls = line_start_;
    bool is_block = false;
    try {
      char c = peek();
      if (c == '<' || is_pname_start(c)) {
        parse_resource();
        skip_ws();
        is_block = !eof() && peek() == '{';
      }
    } catch (const ParserError&) {
      is_block = false;
    }
    pos_ = save_pos;
    line_ = save_line;
    line_start_ = save_ls;
    return is_block;
  }

  Term parse_graph_name() {
    skip_ws();
    Term name = parse_resource();
    if (!name.is_iri()) fail("graph name must be an IRI");
    return name;
  }

  void parse_graph_block(const Term& name) {
    expect_punct('{');
    Graph* prev = current_graph_;
    current_graph_ = &dataset_.named_graph(name);  // created even when empty
    for (;;) {
      skip_ws();
      if (eof()) fail("unterminated graph block");
      if (peek() == '}') {
        get();
        break;
      }
      parse_triples();
      skip_ws();
      if (!eof() && peek() == '.') get();
    }
    current_graph_ = prev;
  }

  void emit(Term s, Term p, Term o) {
    Graph& g = current_graph_ ? *current_graph_ : dataset_.default_graph();
    g.insert(std::move(s), std::move(p), std::move(o));
  }

  // --- statements ---

  void parse_triples() {
    skip_ws();
    char c = peek();
    Term subject;
    if (c == '[') {
      subject = parse_bnode_property_list();
      skip_ws();
      if (peek() == '.' || peek() == '}') return;  // bare property list
    } else if (c == '(') {
      subject = parse_collection();
    } else {
      subject = parse_subject();
    }
    parse_predicate_object_list(subject);
  }

  Term parse_subject() {
    skip_ws();
    char c = peek();
    if (c == '_') return parse_blank_label();
    Term t = parse_resource();
    return t;
  }

  void parse_predicate_object_list(const Term& subject) {
    for (;;) {
      skip_ws();
      Term predicate = parse_verb();
      parse_object_list(subject, predicate);
      skip_ws();
      if (peek() == ';') {
        get();
        skip_ws();
        // trailing ';' before '.' or '}'
        if (peek() == '.' || peek() == '}' || peek() == ']') return;
        continue;
      }
      return;
    }
  }

  Term parse_verb() {
    skip_ws();
    if (peek() == 'a') {
      char after = peek(1);
      if (after == ' ' || after == '\t' || after == '\n' || after == '\r' || after == '<' ||
          after == '[' || after == '(' || after == '_' || after == '"') {
        get();
        return vocab::rdf_type();
      }
    }
    Term t = parse_resource();
    if (!t.is_iri()) fail("predicate must be an IRI");
    return t;
  }

  void parse_object_list(const Term& subject, const Term& predicate) {
    for (;;) {
      Term object = parse_object();
      emit(subject, predicate, object);
      skip_ws();
      if (peek() == ',') {
        get();
        continue;
      }
      return;
    }
  }

  Term parse_object() {
    skip_ws();
    if (eof()) fail("unexpected end of input in object position");
    char c = peek();
    if (c == '<') return parse_resource();
    if (c == '_') return parse_blank_label();
    if (c == '[') return parse_bnode_property_list();
    if (c == '(') return parse_collection();
    if (c == '"' || c == '\'') return parse_rdf_literal();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return parse_numeric_literal();
    if (keyword_is("true")) return make_bool(true);
    if (keyword_is("false")) return make_bool(false);
    return parse_resource();
  }

  bool keyword_is(const char* kw) {
    std::size_t i = 0;
    while (kw[i]) {
      if (peek(i) != kw[i]) return false;
      ++i;
    }
    char after = peek(i);
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':')
      return false;
    consume_keyword(kw);
    return true;
  }

  Term make_bool(bool v) {
    return Term::literal(v ? "true" : "false", vocab::xsd_boolean().value());
  }

  // --- terms ---

  Term parse_resource() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    if (peek() == '<') {
      std::size_t l = line_, c = column();
      std::string iri = parse_iriref();
      try {
        return Term::iri(iri);
      } catch (const std::exception& e) {
        fail_at(l, c, e.what());
      }
    }
    return parse_prefixed_name();
  }

  std::string parse_iriref() {
    skip_ws();
    std::size_t l = line_, c = column();
    if (peek() != '<') fail("expected IRI");
    get();
    std::string raw;
    for (;;) {
      if (eof()) fail_at(l, c, "unterminated IRI");
      char ch = get();
      if (ch == '>') break;
      if (ch == '\\') {
        raw += decode_ucharescape(l, c);
      } else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '<' ||
                 ch == '"' || ch == '{' || ch == '}' || ch == '|' || ch == '^' || ch == '`') {
        fail_at(l, c, std::string("invalid character '") + ch + "' in IRI");
      } else {
        raw += ch;
      }
    }
    try {
      return resolve_iri(raw, base_);
    } catch (const std::exception& e) {
      fail_at(l, c, e.what());
    }
  }

  std::string decode_ucharescape(std::size_t l, std::size_t c) {
    if (eof()) fail_at(l, c, "truncated escape");
    char kind = get();
    int len = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (len == 0) fail_at(l, c, "invalid IRI escape");
    return decode_codepoint(read_hex(len, l, c));
  }

  std::uint32_t read_hex(int len, std::size_t l, std::size_t c) {
    std::uint32_t cp = 0;
    for (int i = 0; i < len; ++i) {
      if (eof()) fail_at(l, c, "truncated \\u escape");
      char h = get();
      cp <<= 4;
      if (h >= '0' && h <= '9') cp |= static_cast<std::uint32_t>(h - '0');
      else if (h >= 'a' && h <= 'f') cp |= static_cast<std::uint32_t>(h - 'a' + 10);
      else if (h >= 'A' && h <= 'F') cp |= static_cast<std::uint32_t>(h - 'A' + 10);
      else fail_at(l, c, "invalid hex digit in escape");
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

  static bool is_pname_start(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  std::string parse_pname_ns() {
    std::string prefix;
    while (!eof()) {
      char c = peek();
      if (c == ':') {
        get();
        return prefix;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
          static_cast<unsigned char>(c) >= 0x80) {
        prefix += get();
      } else {
        break;
      }
    }
    fail("expected prefixed name (missing ':')");
  }

  Term parse_prefixed_name() {
    std::size_t l = line_, c = column();
    std::string prefix = parse_pname_ns();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail_at(l, c, "undefined prefix '" + prefix + ":'");
    std::string local;
    while (!eof()) {
      char ch = peek();
      if (ch == '\\') {
        get();
        if (eof()) fail("truncated local name escape");
        local += get();  // PN_LOCAL_ESC: take the escaped char literally
      } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' ||
                 ch == '.' || ch == '%' || static_cast<unsigned char>(ch) >= 0x80) {
        local += get();
      } else {
        break;
      }
    }
    while (!local.empty() && local.back() == '.') {  // trailing dot ends the statement
      local.pop_back();
      --pos_;
    }
    try {
      return Term::iri(it->second + local);
    } catch (const std::exception& e) {
      fail_at(l, c, e.what());
    }
  }

  Term parse_blank_label() {
    if (peek() != '_' || peek(1) != ':') fail("expected blank node label");
    get();
    get();
    std::string label;
    while (!eof()) {
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
    if (label.empty()) fail("empty blank node label");
    return Term::blank(doc_prefix_ + label);
  }

  Term fresh_blank() {
    return Term::blank(doc_prefix_ + "a" + std::to_string(anon_counter_++));
  }

  Term parse_bnode_property_list() {
    expect_punct('[');
    Term node = fresh_blank();
    skip_ws();
    if (peek() == ']') {
      get();
      return node;
    }
    parse_predicate_object_list(node);
    expect_punct(']');
    return node;
  }

  Term parse_collection() {
    expect_punct('(');
    std::vector<Term> items;
    for (;;) {
      skip_ws();
      if (eof()) fail("unterminated collection");
      if (peek() == ')') {
        get();
        break;
      }
      items.push_back(parse_object());
    }
    if (items.empty()) return vocab::rdf_nil();
    Term head = fresh_blank();
    Term node = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(node, vocab::rdf_first(), items[i]);
      if (i + 1 < items.size()) {
        Term next = fresh_blank();
        emit(node, vocab::rdf_rest(), next);
        node = next;
      } else {
        emit(node, vocab::rdf_rest(), vocab::rdf_nil());
      }
    }
    return head;
  }

  // --- literals ---

  Term parse_rdf_literal() {
    std::string lex = parse_string_body();
    skip_ws();
    if (peek() == '@') {
      get();
      std::string tag;
      while (!eof()) {
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
      Term dt = parse_resource();
      if (!dt.is_iri()) fail("datatype must be an IRI");
      if (dt == vocab::rdf_langString()) fail("rdf:langString requires a language tag");
      return Term::literal(lex, dt.value());
    }
    return Term::literal(lex, vocab::xsd_string().value());
  }

  std::string parse_string_body() {
    std::size_t l = line_, c = column();
    char quote = get();  // '"' or '\''
    bool long_string = false;
    if (peek() == quote && peek(1) == quote) {
      get();
      get();
      long_string = true;
    }
    std::string out;
    for (;;) {
      if (eof()) fail_at(l, c, "unterminated string");
      char ch = get();
      if (ch == quote) {
        if (!long_string) return out;
        if (peek() == quote && peek(1) == quote) {
          get();
          get();
          return out;
        }
        out += ch;
        continue;
      }
      if (!long_string && (ch == '\n' || ch == '\r')) fail_at(l, c, "newline in string");
      if (ch == '\\') {
        if (eof()) fail_at(l, c, "truncated escape");
        char e = get();
        switch (e) {
          case 't': out += '\t'; break;
          case 'b': out += '\b'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 'f': out += '\f'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          case 'u': out += decode_codepoint(read_hex(4, l, c)); break;
          case 'U': out += decode_codepoint(read_hex(8, l, c)); break;
          default: fail_at(l, c, std::string("invalid escape \\") + e);
        }
        continue;
      }
      out += ch;
    }
  }

  Term parse_numeric_literal() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += get();
    bool digits = false, dot = false;
    while (!eof()) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = true;
        lex += get();
      } else if (c == '.' && !dot && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        dot = true;
        lex += get();
      } else {
        break;
      }
    }
    if (!digits) fail("malformed numeric literal");
    return Term::literal(lex, dot ? vocab::xsd_decimal().value() : vocab::xsd_integer().value());
  }
};

}  // namespace

ParseOutcome parse_turtle(std::string_view text, const std::string& base) {
  return TurtleParser(text, base, /*trig=*/false).run();
}

ParseOutcome parse_trig(std::string_view text, const std::string& base) {
  return TurtleParser(text, base, /*trig=*/true).run();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

ParseOutcome parse_file(const std::string& path) {
  std::string text = read_text_file(path);
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".nq" || ext == ".nt") return parse_nquads(text);
  if (ext == ".ttl") return parse_turtle(text);
  return parse_trig(text);
}

}  // namespace shaclds
