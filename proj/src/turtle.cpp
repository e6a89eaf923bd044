#include "simplan/turtle.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace simplan {

namespace {

const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

enum class Tok {
  PrefixKeyword,  // @prefix
  BaseKeyword,    // @base
  PnameNs,        // "ex:"  (value = label without ':')
  PnameLn,        // "ex:Local" (value = label \x00?? no: prefix in value, local in aux)
  IriRef,         // <...> (value = unescaped content, possibly relative)
  BlankNode,      // _:label (value = label)
  String,         // quoted string (value = unescaped)
  LangTag,        // @en (value = tag)
  Integer,
  Decimal,
  Double,
  A,              // keyword 'a'
  BoolTrue,
  BoolFalse,
  Dot,
  Semicolon,
  Comma,
  CaretCaret,     // ^^
  LBracket,       // [  (recognized, rejected by the parser)
  RBracket,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok type;
  std::string value;  // main payload
  std::string aux;    // local part for PnameLn
  int line = 1;
  int column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
};

[[noreturn]] void fail(int line, int column, TurtleErrorKind kind,
                       const std::string& msg) {
  throw TurtleParseError(line, column, kind, msg);
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws_and_comments();
      Token t = next_token();
      bool end = t.type == Tok::End;
      out.push_back(std::move(t));
      if (end) return out;
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws_and_comments() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  Token start_token() const {
    Token t;
    t.line = line_;
    t.column = col_;
    t.begin = pos_;
    return t;
  }

  Token finish(Token t, Tok type, std::string value = {}, std::string aux = {}) {
    t.type = type;
    t.value = std::move(value);
    t.aux = std::move(aux);
    t.end = pos_;
    return t;
  }

  static bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           static_cast<unsigned char>(c) >= 0x80;
  }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || static_cast<unsigned char>(c) >= 0x80;
  }

  Token next_token() {
    Token t = start_token();
    if (eof()) return finish(t, Tok::End);
    char c = peek();

    switch (c) {
      case '.': {
        // Distinguish statement '.' from a leading-dot decimal like ".5".
        if (std::isdigit(static_cast<unsigned char>(peek(1)))) break;
        advance();
        return finish(t, Tok::Dot);
      }
      case ';': advance(); return finish(t, Tok::Semicolon);
      case ',': advance(); return finish(t, Tok::Comma);
      case '[': advance(); return finish(t, Tok::LBracket);
      case ']': advance(); return finish(t, Tok::RBracket);
      case '(': advance(); return finish(t, Tok::LParen);
      case ')': advance(); return finish(t, Tok::RParen);
      case '^':
        if (peek(1) == '^') {
          advance();
          advance();
          return finish(t, Tok::CaretCaret);
        }
        fail(t.line, t.column, TurtleErrorKind::Lexical, "stray '^'");
      case '<': return lex_iriref(std::move(t));
      case '"':
      case '\'': return lex_string(std::move(t));
      case '@': return lex_at(std::move(t));
      case '_': return lex_blank(std::move(t));
      default: break;
    }

    if (c == '+' || c == '-' || c == '.' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      return lex_number(std::move(t));
    }
    if (name_start(c) || c == ':') return lex_name(std::move(t));
    fail(t.line, t.column, TurtleErrorKind::Lexical,
         std::string("unexpected character '") + c + "'");
  }

  void append_codepoint(std::string& out, unsigned long cp, int line, int col) {
    if (cp > 0x10FFFF) {
      fail(line, col, TurtleErrorKind::Lexical, "code point out of range");
    }
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
  }

  unsigned long read_hex_escape(int digits) {
    int eline = line_, ecol = col_;
    unsigned long cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (eof() || !std::isxdigit(static_cast<unsigned char>(peek()))) {
        fail(line_, col_, TurtleErrorKind::Lexical,
             "bad unicode escape: expected hex digit");
      }
      char h = advance();
      cp = cp * 16 + (std::isdigit(static_cast<unsigned char>(h))
                          ? h - '0'
                          : std::tolower(h) - 'a' + 10);
    }
    (void)eline;
    (void)ecol;
    return cp;
  }

  Token lex_iriref(Token t) {
    advance();  // '<'
    std::string value;
    for (;;) {
      if (eof()) {
        fail(t.line, t.column, TurtleErrorKind::Lexical, "unterminated IRI");
      }
      int cline = line_, ccol = col_;
      char c = advance();
      if (c == '>') return finish(std::move(t), Tok::IriRef, std::move(value));
      if (c == '\\') {
        char e = eof() ? '\0' : advance();
        if (e == 'u') {
          append_codepoint(value, read_hex_escape(4), cline, ccol);
        } else if (e == 'U') {
          append_codepoint(value, read_hex_escape(8), cline, ccol);
        } else {
          fail(cline, ccol, TurtleErrorKind::Lexical,
               "only \\u and \\U escapes are allowed in IRIs");
        }
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' ||
          c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
        fail(cline, ccol, TurtleErrorKind::Lexical,
             "character not allowed in IRI");
      }
      value += c;
    }
  }

  Token lex_string(Token t) {
    char quote = advance();
    bool long_string = false;
    if (peek() == quote && peek(1) == quote) {
      advance();
      advance();
      long_string = true;
    }
    std::string value;
    for (;;) {
      if (eof()) {
        fail(t.line, t.column, TurtleErrorKind::Lexical,
             "unterminated string literal");
      }
      int cline = line_, ccol = col_;
      char c = advance();
      if (c == quote) {
        if (!long_string) {
          return finish(std::move(t), Tok::String, std::move(value));
        }
        if (peek() == quote && peek(1) == quote) {
          advance();
          advance();
          return finish(std::move(t), Tok::String, std::move(value));
        }
        value += c;
        continue;
      }
      if (!long_string && (c == '\n' || c == '\r')) {
        fail(cline, ccol, TurtleErrorKind::Lexical,
             "newline in single-line string literal");
      }
      if (c == '\\') {
        char e = eof() ? '\0' : advance();
        switch (e) {
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u': append_codepoint(value, read_hex_escape(4), cline, ccol); break;
          case 'U': append_codepoint(value, read_hex_escape(8), cline, ccol); break;
          default:
            fail(cline, ccol, TurtleErrorKind::Lexical,
                 std::string("unknown string escape '\\") + e + "'");
        }
        continue;
      }
      value += c;
    }
  }

  Token lex_at(Token t) {
    advance();  // '@'
    std::string word;
    while (!eof() && (std::isalpha(static_cast<unsigned char>(peek())) ||
                      peek() == '-')) {
      word += advance();
    }
    if (word == "prefix") return finish(std::move(t), Tok::PrefixKeyword);
    if (word == "base") return finish(std::move(t), Tok::BaseKeyword);
    if (!word.empty()) {
      return finish(std::move(t), Tok::LangTag, std::move(word));
    }
    fail(t.line, t.column, TurtleErrorKind::Lexical, "stray '@'");
  }

  Token lex_blank(Token t) {
    if (peek(1) != ':') {
      // '_' opening a name (not "_:") is not meaningful in this grammar.
      return lex_name(std::move(t));
    }
    advance();
    advance();
    std::string label;
    while (!eof() && (name_char(peek()) || peek() == '.')) {
      if (peek() == '.' && !name_char(peek(1))) break;  // trailing dot ends it
      label += advance();
    }
    if (label.empty()) {
      fail(t.line, t.column, TurtleErrorKind::Lexical, "empty blank node label");
    }
    return finish(std::move(t), Tok::BlankNode, std::move(label));
  }

  Token lex_number(Token t) {
    std::string text;
    if (peek() == '+' || peek() == '-') text += advance();
    bool digits_before = false, dot = false, digits_after = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      text += advance();
      digits_before = true;
    }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      text += advance();
      dot = true;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        text += advance();
        digits_after = true;
      }
    }
    bool exponent = false;
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '+' || peek(1) == '-') &&
          std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      exponent = true;
      text += advance();
      if (peek() == '+' || peek() == '-') text += advance();
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        text += advance();
      }
    }
    if (!digits_before && !digits_after) {
      fail(t.line, t.column, TurtleErrorKind::Lexical, "malformed number");
    }
    Tok type = exponent ? Tok::Double : (dot ? Tok::Decimal : Tok::Integer);
    return finish(std::move(t), type, std::move(text));
  }

  Token lex_name(Token t) {
    // PN_PREFIX? ':' PN_LOCAL?  |  bare keyword (a, true, false)
    std::string first;
    while (!eof() && (name_char(peek()) || peek() == '.')) {
      if (peek() == '.' && !(name_char(peek(1)) || peek(1) == ':')) break;
      first += advance();
    }
    if (peek() != ':') {
      if (first == "a") return finish(std::move(t), Tok::A);
      if (first == "true") return finish(std::move(t), Tok::BoolTrue);
      if (first == "false") return finish(std::move(t), Tok::BoolFalse);
      fail(t.line, t.column, TurtleErrorKind::Lexical,
           "expected a prefixed name, got bare word '" + first + "'");
    }
    advance();  // ':'
    std::string local;
    for (;;) {
      if (eof()) break;
      char c = peek();
      if (c == '\\') {
        // PN_LOCAL_ESC: backslash before reserved punctuation.
        int cline = line_, ccol = col_;
        advance();
        if (eof()) {
          fail(cline, ccol, TurtleErrorKind::Lexical, "dangling escape");
        }
        char e = advance();
        static const std::string allowed = "_~.-!$&'()*+,;=/?#@%";
        if (allowed.find(e) == std::string::npos) {
          fail(cline, ccol, TurtleErrorKind::Lexical,
               std::string("invalid local-name escape '\\") + e + "'");
        }
        local += e;
        continue;
      }
      if (name_char(c) || c == '%' || c == ':') {
        local += advance();
        continue;
      }
      if (c == '.' && (name_char(peek(1)) || peek(1) == ':' || peek(1) == '%')) {
        local += advance();  // interior dots belong to the name
        continue;
      }
      break;
    }
    if (local.empty()) {
      return finish(std::move(t), Tok::PnameNs, std::move(first));
    }
    return finish(std::move(t), Tok::PnameLn, std::move(first),
                  std::move(local));
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  Graph run() {
    while (!at(Tok::End)) {
      if (at(Tok::PrefixKeyword)) {
        parse_prefix();
      } else if (at(Tok::BaseKeyword)) {
        parse_base();
      } else {
        parse_triples();
      }
    }
    return std::move(graph_);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
  Graph graph_;
  std::string base_;
  bool base_seen_ = false;

  const Token& cur() const { return tokens_[idx_]; }
  bool at(Tok t) const { return cur().type == t; }
  Token take() { return tokens_[idx_++]; }

  [[noreturn]] void syntax_error(const Token& t, const std::string& msg) {
    fail(t.line, t.column, TurtleErrorKind::Syntactic, msg);
  }

  Token expect(Tok type, const std::string& what) {
    if (!at(type)) syntax_error(cur(), "expected " + what);
    return take();
  }

  void parse_prefix() {
    take();
    Token label = expect(Tok::PnameNs, "a prefix label ending in ':'");
    Token iri = expect(Tok::IriRef, "a namespace IRI");
    expect(Tok::Dot, "'.' after @prefix directive");
    graph_.add_prefix(label.value, resolve_iri(iri));
  }

  void parse_base() {
    Token kw = take();
    if (base_seen_) {
      syntax_error(kw, "multiple @base directives are not supported");
    }
    Token iri = expect(Tok::IriRef, "a base IRI");
    expect(Tok::Dot, "'.' after @base directive");
    if (!is_absolute_iri(iri.value)) {
      fail(iri.line, iri.column, TurtleErrorKind::Syntactic,
           "@base IRI must be absolute");
    }
    base_ = iri.value;
    base_seen_ = true;
  }

  std::string resolve_iri(const Token& t) {
    if (is_absolute_iri(t.value)) return t.value;
    if (!base_seen_) {
      fail(t.line, t.column, TurtleErrorKind::Syntactic,
           "relative IRI without @base: <" + t.value + ">");
    }
    return base_ + t.value;
  }

  std::string expand_pname(const Token& t) {
    const auto& prefixes = graph_.prefixes();
    auto it = prefixes.find(t.value);
    if (it == prefixes.end()) {
      fail(t.line, t.column, TurtleErrorKind::UnknownPrefix,
           "unknown prefix: " + t.value + ":");
    }
    return it->second + t.aux;
  }

  Term parse_iri_term() {
    if (at(Tok::IriRef)) {
      Token t = take();
      return Term::iri(resolve_iri(t));
    }
    if (at(Tok::PnameLn) || at(Tok::PnameNs)) {
      Token t = take();
      return Term::iri(expand_pname(t));
    }
    syntax_error(cur(), "expected an IRI");
  }

  Term parse_subject() {
    if (at(Tok::BlankNode)) return Term::blank(take().value);
    if (at(Tok::LBracket)) {
      syntax_error(cur(), "anonymous blank nodes \"[ ]\" are not supported");
    }
    if (at(Tok::LParen)) {
      syntax_error(cur(), "collections \"( )\" are not supported");
    }
    if (at(Tok::IriRef) || at(Tok::PnameLn) || at(Tok::PnameNs)) {
      return parse_iri_term();
    }
    syntax_error(cur(), "expected a subject (IRI or blank node)");
  }

  Term parse_predicate() {
    if (at(Tok::A)) {
      take();
      return Term::iri(kRdfType);
    }
    if (at(Tok::IriRef) || at(Tok::PnameLn) || at(Tok::PnameNs)) {
      return parse_iri_term();
    }
    syntax_error(cur(), "expected a predicate (IRI or 'a')");
  }

  Term parse_literal() {
    Token t = take();
    if (t.type == Tok::Integer) {
      return Term::literal(t.value, xsd::integer);
    }
    if (t.type == Tok::Decimal) {
      return Term::literal(t.value, xsd::decimal);
    }
    if (t.type == Tok::Double) {
      return Term::literal(t.value, xsd::double_);
    }
    if (t.type == Tok::BoolTrue || t.type == Tok::BoolFalse) {
      return Term::literal(t.type == Tok::BoolTrue ? "true" : "false",
                           xsd::boolean);
    }
    // String, optionally followed by a language tag or ^^datatype.
    if (at(Tok::LangTag)) {
      Token lang = take();
      return Term::literal(t.value, "", lang.value);
    }
    if (at(Tok::CaretCaret)) {
      take();
      Term dt = parse_iri_term();
      return Term::literal(t.value, dt.value);
    }
    return Term::literal(t.value);
  }

  Term parse_object() {
    if (at(Tok::BlankNode)) return Term::blank(take().value);
    if (at(Tok::LBracket)) {
      syntax_error(cur(), "anonymous blank nodes \"[ ]\" are not supported");
    }
    if (at(Tok::LParen)) {
      syntax_error(cur(), "collections \"( )\" are not supported");
    }
    if (at(Tok::IriRef) || at(Tok::PnameLn) || at(Tok::PnameNs)) {
      return parse_iri_term();
    }
    if (at(Tok::String) || at(Tok::Integer) || at(Tok::Decimal) ||
        at(Tok::Double) || at(Tok::BoolTrue) || at(Tok::BoolFalse)) {
      return parse_literal();
    }
    syntax_error(cur(), "expected an object (IRI, blank node or literal)");
  }

  void parse_triples() {
    Term subject = parse_subject();
    for (;;) {
      Term predicate = parse_predicate();
      for (;;) {
        Term object = parse_object();
        graph_.insert({subject, predicate, object});
        if (at(Tok::Comma)) {
          take();
          continue;
        }
        break;
      }
      if (at(Tok::Semicolon)) {
        while (at(Tok::Semicolon)) take();
        if (at(Tok::Dot)) break;  // trailing ';' before '.'
        continue;
      }
      break;
    }
    expect(Tok::Dot, "'.', ';' or ',' after object");
  }
};

bool valid_shorthand(const Term& lit) {
  const std::string& s = lit.value;
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (lit.datatype == xsd::boolean) {
    return s == "true" || s == "false";
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  if (lit.datatype == xsd::integer) {
    return digits(i, s.size());
  }
  if (lit.datatype == xsd::decimal) {
    auto dot = s.find('.');
    if (dot == std::string::npos || dot < i) return false;
    bool before = dot == i || digits(i, dot);
    return before && digits(dot + 1, s.size());
  }
  if (lit.datatype == xsd::double_) {
    auto e = s.find_first_of("eE", i);
    if (e == std::string::npos || e == i) return false;
    std::string mantissa = s.substr(i, e - i);
    auto dot = mantissa.find('.');
    bool mantissa_ok;
    if (dot == std::string::npos) {
      mantissa_ok = digits(i, e);
    } else {
      // The lexer only consumes a dot followed by digits, so require them.
      mantissa_ok = (dot == 0 || digits(i, i + dot)) &&
                    digits(i + dot + 1, e);
    }
    if (!mantissa_ok) return false;
    std::size_t x = e + 1;
    if (x < s.size() && (s[x] == '+' || s[x] == '-')) ++x;
    return digits(x, s.size());
  }
  return false;
}

std::string escape_turtle_string(const std::string& s) {
  std::ostringstream out;
  for (unsigned char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\r': out << "\\r"; break;
      case '\t': out << "\\t"; break;
      case '\b': out << "\\b"; break;
      case '\f': out << "\\f"; break;
      default:
        if (c < 0x20) {
          static const char hex[] = "0123456789ABCDEF";
          out << "\\u00" << hex[c >> 4] << hex[c & 0xF];
        } else {
          out << static_cast<char>(c);
        }
    }
  }
  return out.str();
}

std::string render_term(const Term& t, const PrefixMap& prefixes,
                        bool predicate_position = false) {
  switch (t.kind) {
    case TermKind::Iri:
      if (predicate_position && t.value == kRdfType) return "a";
      return compact_iri(prefixes, t.value);
    case TermKind::BlankNode:
      return "_:" + t.value;
    case TermKind::Literal: {
      if (t.lang.empty() && !t.datatype.empty() && valid_shorthand(t)) {
        return t.value;
      }
      std::string out = "\"" + escape_turtle_string(t.value) + "\"";
      if (!t.lang.empty()) {
        out += "@" + t.lang;
      } else if (!t.datatype.empty()) {
        out += "^^" + compact_iri(prefixes, t.datatype);
      }
      return out;
    }
    case TermKind::Variable:
      break;
  }
  return t.to_string();
}

}  // namespace

TurtleParseError::TurtleParseError(int line, int column, TurtleErrorKind kind,
                                   const std::string& message)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      kind_(kind),
      message_(message) {}

Graph parse_turtle(std::string_view text) { return Parser(text).run(); }

std::vector<TokenSpan> tokenize_turtle(std::string_view text) {
  std::vector<TokenSpan> spans;
  for (const Token& t : Lexer(text).run()) {
    if (t.type == Tok::End) break;
    spans.push_back({t.begin, t.end});
  }
  return spans;
}

std::string serialize_turtle(const Graph& graph) {
  std::ostringstream out;
  const PrefixMap& prefixes = graph.prefixes();
  for (const auto& [label, ns] : prefixes) {
    out << "@prefix " << label << ": <" << ns << "> .\n";
  }
  if (!prefixes.empty() && !graph.empty()) out << "\n";

  const Term* current_subject = nullptr;
  const Term* current_predicate = nullptr;
  for (const Triple& t : graph) {
    if (!current_subject || t.subject != *current_subject) {
      if (current_subject) out << " .\n";
      out << render_term(t.subject, prefixes) << " "
          << render_term(t.predicate, prefixes, true) << " "
          << render_term(t.object, prefixes);
    } else if (t.predicate != *current_predicate) {
      out << " ;\n    " << render_term(t.predicate, prefixes, true) << " "
          << render_term(t.object, prefixes);
    } else {
      out << ", " << render_term(t.object, prefixes);
    }
    current_subject = &t.subject;
    current_predicate = &t.predicate;
  }
  if (current_subject) out << " .\n";
  return out.str();
}

}  // namespace simplan
