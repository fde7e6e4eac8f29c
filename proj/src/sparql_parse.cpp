#include "shaclds/sparql.hpp"
#include "shaclds/vocab.hpp"

#include <cctype>

namespace shaclds {

namespace {

const char* kUnsupported[] = {"OPTIONAL", "MINUS",  "SERVICE", "BIND",
                              "VALUES",   "ASK",    "CONSTRUCT", "DESCRIBE",
                              "ORDER",    "LIMIT",  "OFFSET",  "GROUP",
                              "HAVING",   "REDUCED", "FROM"};

class QueryParser {
public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  QueryAlgebra parse() {
    QueryAlgebra q;
    parse_prologue(q);
    expect_keyword("SELECT");
    if (keyword_ahead("DISTINCT")) {
      consume_keyword();
      q.distinct = true;
    }
    parse_projection(q);
    if (keyword_ahead("WHERE")) consume_keyword();
    q.pattern = parse_group();
    skip_ws();
    if (!eof()) {
      check_unsupported();
      fail("unexpected trailing input");
    }
    if (q.projection.empty()) fail("projection is empty");
    return q;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  std::map<std::string, std::string> prefixes_;

  std::size_t column() const { return pos_ - line_start_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw QueryParseError(line_, column(), msg);
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

  // Case-insensitive keyword lookahead; keywords end at a non-name char.
  std::size_t keyword_len_ = 0;
  bool keyword_ahead(const char* kw) {
    skip_ws();
    std::size_t i = 0;
    while (kw[i]) {
      if (std::toupper(static_cast<unsigned char>(peek(i))) != kw[i]) return false;
      ++i;
    }
    char after = peek(i);
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':')
      return false;
    keyword_len_ = i;
    return true;
  }
  void consume_keyword() {
    for (std::size_t i = 0; i < keyword_len_; ++i) get();
  }
  void expect_keyword(const char* kw) {
    if (!keyword_ahead(kw)) fail(std::string("expected ") + kw);
    consume_keyword();
  }

  void check_unsupported() {
    for (const char* kw : kUnsupported) {
      if (keyword_ahead(kw)) fail(std::string("unsupported construct: ") + kw);
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

  // --- prologue ---

  void parse_prologue(QueryAlgebra& q) {
    for (;;) {
      skip_ws();
      if (keyword_ahead("PREFIX")) {
        consume_keyword();
        skip_ws();
        std::string prefix;
        while (!eof() && peek() != ':') {
          char c = peek();
          if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
            prefix += get();
          } else {
            fail("malformed prefix declaration");
          }
        }
        expect_punct(':');
        skip_ws();
        prefixes_[prefix] = parse_iriref();
      } else if (keyword_ahead("BASE")) {
        fail("unsupported construct: BASE");
      } else {
        break;
      }
    }
    q.prefixes = prefixes_;
  }

  // --- projection ---

  void parse_projection(QueryAlgebra& q) {
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '?' || c == '$') {
        Projection p;
        p.var = parse_var();
        q.projection.push_back(std::move(p));
      } else if (c == '(') {
        get();
        Projection p;
        p.is_expr = true;
        p.expr = parse_expression();
        expect_keyword("AS");
        skip_ws();
        p.var = parse_var();
        expect_punct(')');
        q.projection.push_back(std::move(p));
      } else if (c == '*') {
        fail("unsupported construct: SELECT *");
      } else {
        break;
      }
    }
  }

  std::string parse_var() {
    skip_ws();
    char sigil = peek();
    if (sigil != '?' && sigil != '$') fail("expected variable");
    get();
    std::string name;
    while (!eof()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') name += get();
      else break;
    }
    if (name.empty()) fail("empty variable name");
    return name;
  }

  // --- group graph pattern ---

  AlgebraNode parse_group() {
    expect_punct('{');
    std::vector<AlgebraNode> elements;
    struct PendingFilter {
      int kind;  // 0 plain, 1 exists, 2 not-exists
      Expr expr;
      AlgebraNode pattern;
    };
    std::vector<PendingFilter> filters;
    std::vector<TriplePattern> bgp;

    auto flush_bgp = [&]() {
      if (bgp.empty()) return;
      AlgebraNode n;
      n.kind = AlgebraNode::Kind::Bgp;
      n.patterns = std::move(bgp);
      bgp.clear();
      elements.push_back(std::move(n));
    };

    for (;;) {
      skip_ws();
      if (eof()) fail("unterminated group");
      char c = peek();
      if (c == '}') {
        get();
        break;
      }
      if (c == '.') {
        get();
        continue;
      }
      if (keyword_ahead("FILTER")) {
        consume_keyword();
        skip_ws();
        if (keyword_ahead("NOT")) {
          consume_keyword();
          expect_keyword("EXISTS");
          PendingFilter f;
          f.kind = 2;
          f.pattern = parse_group();
          filters.push_back(std::move(f));
        } else if (keyword_ahead("EXISTS")) {
          consume_keyword();
          PendingFilter f;
          f.kind = 1;
          f.pattern = parse_group();
          filters.push_back(std::move(f));
        } else {
          PendingFilter f;
          f.kind = 0;
          bool parens = try_punct('(');
          f.expr = parse_expression();
          if (parens) expect_punct(')');
          filters.push_back(std::move(f));
        }
        continue;
      }
      if (keyword_ahead("GRAPH")) {
        consume_keyword();
        flush_bgp();
        AlgebraNode n;
        n.kind = AlgebraNode::Kind::Graph;
        skip_ws();
        if (peek() == '?' || peek() == '$') {
          n.graph_is_var = true;
          n.graph_var = parse_var();
        } else {
          Term t = parse_iri_term();
          n.graph_name = std::move(t);
        }
        n.children.push_back(parse_group());
        elements.push_back(std::move(n));
        continue;
      }
      if (c == '{') {
        flush_bgp();
        AlgebraNode sub = parse_group();
        while (keyword_ahead("UNION")) {
          consume_keyword();
          AlgebraNode rhs = parse_group();
          AlgebraNode u;
          u.kind = AlgebraNode::Kind::Union;
          u.children.push_back(std::move(sub));
          u.children.push_back(std::move(rhs));
          sub = std::move(u);
        }
        elements.push_back(std::move(sub));
        continue;
      }
      check_unsupported();
      parse_triples_same_subject(bgp);
    }

    flush_bgp();

    // Fold elements left-to-right, then wrap filters in source order.
    AlgebraNode group;
    if (elements.empty()) {
      group.kind = AlgebraNode::Kind::Bgp;  // empty BGP: the unit solution
    } else {
      group = std::move(elements[0]);
      for (std::size_t i = 1; i < elements.size(); ++i) {
        AlgebraNode j;
        j.kind = AlgebraNode::Kind::Join;
        j.children.push_back(std::move(group));
        j.children.push_back(std::move(elements[i]));
        group = std::move(j);
      }
    }
    for (auto& f : filters) {
      AlgebraNode n;
      if (f.kind == 0) {
        n.kind = AlgebraNode::Kind::Filter;
        n.expr = std::move(f.expr);
        n.children.push_back(std::move(group));
      } else {
        n.kind = f.kind == 1 ? AlgebraNode::Kind::FilterExists
                             : AlgebraNode::Kind::FilterNotExists;
        n.children.push_back(std::move(group));
        n.children.push_back(std::move(f.pattern));
      }
      group = std::move(n);
    }
    return group;
  }

  void parse_triples_same_subject(std::vector<TriplePattern>& bgp) {
    PatternSlot subject = parse_slot(/*predicate_position=*/false);
    for (;;) {
      PatternSlot predicate = parse_slot(/*predicate_position=*/true);
      for (;;) {
        PatternSlot object = parse_slot(false);
        bgp.push_back({subject, predicate, object});
        if (!try_punct(',')) break;
      }
      if (try_punct(';')) {
        skip_ws();
        if (peek() == '.' || peek() == '}') return;
        continue;
      }
      return;
    }
  }

  PatternSlot parse_slot(bool predicate_position) {
    skip_ws();
    if (eof()) fail("unexpected end of pattern");
    char c = peek();
    if (c == '?' || c == '$') return PatternSlot::variable(parse_var());
    if (predicate_position && c == 'a') {
      char after = peek(1);
      if (after == ' ' || after == '\t' || after == '\n' || after == '\r') {
        get();
        return PatternSlot::constant(vocab::rdf_type());
      }
    }
    if (c == '[' || c == '(')
      fail("unsupported construct: blank node pattern in query");
    if (c == '_') fail("unsupported construct: blank node label in query");
    if (c == '"' || c == '\'') return PatternSlot::constant(parse_literal());
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return PatternSlot::constant(parse_numeric());
    if (keyword_ahead("TRUE")) {
      consume_keyword();
      return PatternSlot::constant(Term::literal("true", vocab::xsd_boolean().value()));
    }
    if (keyword_ahead("FALSE")) {
      consume_keyword();
      return PatternSlot::constant(Term::literal("false", vocab::xsd_boolean().value()));
    }
    return PatternSlot::constant(parse_iri_term());
  }

  // --- terms ---

  std::string parse_iriref() {
    skip_ws();
    if (peek() != '<') fail("expected IRI");
    std::size_t l = line_, c = column();
    get();
    std::string iri;
    for (;;) {
      if (eof()) throw QueryParseError(l, c, "unterminated IRI");
      char ch = get();
      if (ch == '>') break;
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
        throw QueryParseError(l, c, "whitespace in IRI");
      iri += ch;
    }
    return iri;
  }

  Term parse_iri_term() {
    skip_ws();
    std::size_t l = line_, c = column();
    if (peek() == '<') {
      try {
        return Term::iri(parse_iriref());
      } catch (const std::invalid_argument& e) {
        throw QueryParseError(l, c, e.what());
      }
    }
    // prefixed name
    std::string prefix;
    while (!eof()) {
      char ch = peek();
      if (ch == ':') break;
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.') {
        prefix += get();
      } else {
        break;
      }
    }
    if (eof() || peek() != ':') throw QueryParseError(l, c, "expected IRI or prefixed name");
    get();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end())
      throw QueryParseError(l, c, "undefined prefix '" + prefix + ":'");
    std::string local;
    while (!eof()) {
      char ch = peek();
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' ||
          ch == '.' || ch == '%') {
        local += get();
      } else {
        break;
      }
    }
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    try {
      return Term::iri(it->second + local);
    } catch (const std::invalid_argument& e) {
      throw QueryParseError(l, c, e.what());
    }
  }

  Term parse_literal() {
    std::size_t l = line_, c = column();
    char quote = get();
    bool long_string = false;
    if (peek() == quote && peek(1) == quote) {
      get();
      get();
      long_string = true;
    }
    std::string lex;
    for (;;) {
      if (eof()) throw QueryParseError(l, c, "unterminated string");
      char ch = get();
      if (ch == quote) {
        if (!long_string) break;
        if (peek() == quote && peek(1) == quote) {
          get();
          get();
          break;
        }
        lex += ch;
        continue;
      }
      if (ch == '\\') {
        if (eof()) throw QueryParseError(l, c, "truncated escape");
        char e = get();
        switch (e) {
          case 't': lex += '\t'; break;
          case 'n': lex += '\n'; break;
          case 'r': lex += '\r'; break;
          case 'b': lex += '\b'; break;
          case 'f': lex += '\f'; break;
          case '"': lex += '"'; break;
          case '\'': lex += '\''; break;
          case '\\': lex += '\\'; break;
          default: throw QueryParseError(l, c, std::string("invalid escape \\") + e);
        }
        continue;
      }
      lex += ch;
    }
    skip_ws();
    if (peek() == '@') {
      get();
      std::string tag;
      while (!eof() &&
             (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
        tag += get();
      if (tag.empty()) fail("empty language tag");
      return Term::literal_lang(lex, tag);
    }
    if (peek() == '^' && peek(1) == '^') {
      get();
      get();
      Term dt = parse_iri_term();
      return Term::literal(lex, dt.value());
    }
    return Term::literal(lex, vocab::xsd_string().value());
  }

  Term parse_numeric() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += get();
    bool dot = false, digits = false;
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
    return Term::literal(lex, dot ? vocab::xsd_decimal().value()
                                  : vocab::xsd_integer().value());
  }

  // --- expressions ---

  Expr parse_expression() { return parse_or(); }

  Expr parse_or() {
    Expr e = parse_and();
    for (;;) {
      skip_ws();
      if (peek() == '|' && peek(1) == '|') {
        get();
        get();
        Expr rhs = parse_and();
        Expr o;
        o.kind = Expr::Kind::Or;
        o.args.push_back(std::move(e));
        o.args.push_back(std::move(rhs));
        e = std::move(o);
      } else {
        return e;
      }
    }
  }

  Expr parse_and() {
    Expr e = parse_relational();
    for (;;) {
      skip_ws();
      if (peek() == '&' && peek(1) == '&') {
        get();
        get();
        Expr rhs = parse_relational();
        Expr a;
        a.kind = Expr::Kind::And;
        a.args.push_back(std::move(e));
        a.args.push_back(std::move(rhs));
        e = std::move(a);
      } else {
        return e;
      }
    }
  }

  Expr parse_relational() {
    Expr lhs = parse_primary();
    skip_ws();
    std::string op;
    char c = peek();
    if (c == '=' ) {
      get();
      op = "=";
    } else if (c == '!' && peek(1) == '=') {
      get();
      get();
      op = "!=";
    } else if (c == '<' && peek(1) == '=') {
      get();
      get();
      op = "<=";
    } else if (c == '>' && peek(1) == '=') {
      get();
      get();
      op = ">=";
    } else if (c == '<' && peek(1) != '<') {
      // '<' starts an IRI only in term positions; here it is an operator
      // unless it scans as an IRIREF.
      if (!iriref_ahead()) {
        get();
        op = "<";
      }
    } else if (c == '>') {
      get();
      op = ">";
    }
    if (op.empty()) return lhs;
    Expr rhs = parse_primary();
    Expr e;
    e.kind = Expr::Kind::Compare;
    e.cmp = op;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  bool iriref_ahead() {
    if (peek() != '<') return false;
    for (std::size_t i = 1; pos_ + i < text_.size() && i < 2048; ++i) {
      char c = text_[pos_ + i];
      if (c == '>') return true;
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<') return false;
    }
    return false;
  }

  Expr parse_primary() {
    skip_ws();
    if (eof()) fail("unexpected end of expression");
    char c = peek();
    if (c == '(') {
      get();
      Expr e = parse_expression();
      expect_punct(')');
      return e;
    }
    if (c == '!') {
      get();
      Expr inner = parse_primary();
      Expr e;
      e.kind = Expr::Kind::Not;
      e.args.push_back(std::move(inner));
      return e;
    }
    if (c == '?' || c == '$') {
      Expr e;
      e.kind = Expr::Kind::Variable;
      e.var = parse_var();
      return e;
    }
    if (keyword_ahead("REGEX")) return parse_call(Expr::Kind::Regex, 2, 3);
    if (keyword_ahead("STR")) return parse_call(Expr::Kind::Str, 1, 1);
    if (keyword_ahead("DATATYPE")) return parse_call(Expr::Kind::Datatype, 1, 1);
    if (keyword_ahead("LANG")) return parse_call(Expr::Kind::Lang, 1, 1);
    if (keyword_ahead("BOUND")) {
      consume_keyword();
      expect_punct('(');
      skip_ws();
      Expr e;
      e.kind = Expr::Kind::Bound;
      e.var = parse_var();
      expect_punct(')');
      return e;
    }
    if (keyword_ahead("TRUE")) {
      consume_keyword();
      Expr e;
      e.constant = Term::literal("true", vocab::xsd_boolean().value());
      return e;
    }
    if (keyword_ahead("FALSE")) {
      consume_keyword();
      Expr e;
      e.constant = Term::literal("false", vocab::xsd_boolean().value());
      return e;
    }
    Expr e;
    if (c == '"' || c == '\'') {
      e.constant = parse_literal();
    } else if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      e.constant = parse_numeric();
    } else {
      e.constant = parse_iri_term();
    }
    return e;
  }

  Expr parse_call(Expr::Kind kind, std::size_t min_args, std::size_t max_args) {
    consume_keyword();
    expect_punct('(');
    Expr e;
    e.kind = kind;
    for (;;) {
      e.args.push_back(parse_expression());
      if (try_punct(',')) continue;
      break;
    }
    expect_punct(')');
    if (e.args.size() < min_args || e.args.size() > max_args)
      fail("wrong number of arguments to builtin");
    return e;
  }
};

}  // namespace

QueryAlgebra parse_query(std::string_view text) { return QueryParser(text).parse(); }

void collect_pattern_variables(const AlgebraNode& node, std::vector<std::string>& out) {
  auto add = [&out](const PatternSlot& s) {
    if (s.is_var) out.push_back(s.var);
  };
  switch (node.kind) {
    case AlgebraNode::Kind::Bgp:
      for (const auto& p : node.patterns) {
        add(p.subject);
        add(p.predicate);
        add(p.object);
      }
      break;
    case AlgebraNode::Kind::Graph:
      if (node.graph_is_var) out.push_back(node.graph_var);
      collect_pattern_variables(node.children[0], out);
      break;
    case AlgebraNode::Kind::Join:
    case AlgebraNode::Kind::Union:
      collect_pattern_variables(node.children[0], out);
      collect_pattern_variables(node.children[1], out);
      break;
    case AlgebraNode::Kind::Filter:
      collect_pattern_variables(node.children[0], out);
      break;
    case AlgebraNode::Kind::FilterExists:
    case AlgebraNode::Kind::FilterNotExists:
      collect_pattern_variables(node.children[0], out);
      break;
  }
}

}  // namespace shaclds
