#include "simplan/query.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace simplan {

namespace {

const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

// Keywords we recognize only to reject them by name.
const char* const kUnsupported[] = {
    "FILTER",    "OPTIONAL", "UNION",  "DISTINCT", "REDUCED", "GRAPH",
    "SERVICE",   "BIND",     "VALUES", "MINUS",    "LIMIT",   "OFFSET",
    "ORDER",     "GROUP",    "HAVING", "ASK",      "CONSTRUCT",
    "DESCRIBE",  "INSERT",   "DELETE", "BASE",     "FROM",    "EXISTS",
    "NOT",       "AS"};

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }
};

[[noreturn]] void fail(int line, int col, QueryErrorKind kind,
                       const std::string& msg) {
  throw QueryParseError(line, col, kind, msg);
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

class QueryParser {
 public:
  QueryParser(std::string_view text, const PrefixMap& defaults)
      : cur_{text}, prefixes_(defaults) {}

  SelectQuery run() {
    parse_prologue();
    expect_keyword("SELECT");
    parse_projection();
    expect_keyword("WHERE");
    parse_group();
    cur_.skip_ws();
    if (!cur_.eof()) {
      fail(cur_.line, cur_.col, QueryErrorKind::Syntax,
           "unexpected content after '}'");
    }
    validate();
    return std::move(query_);
  }

 private:
  Cursor cur_;
  PrefixMap prefixes_;
  SelectQuery query_;

  std::string read_word() {
    std::string w;
    while (!cur_.eof() && is_name_char(cur_.peek())) w += cur_.advance();
    return w;
  }

  void reject_if_unsupported(const std::string& word, int line, int col) {
    std::string u = upper(word);
    for (const char* k : kUnsupported) {
      if (u == k) {
        fail(line, col, QueryErrorKind::UnsupportedFeature,
             "unsupported: " + u);
      }
    }
  }

  void parse_prologue() {
    for (;;) {
      cur_.skip_ws();
      std::size_t save = cur_.pos;
      int sl = cur_.line, sc = cur_.col;
      std::string word = read_word();
      if (upper(word) != "PREFIX") {
        reject_if_unsupported(word, sl, sc);
        cur_.pos = save;
        cur_.line = sl;
        cur_.col = sc;
        return;
      }
      cur_.skip_ws();
      int ll = cur_.line, lc = cur_.col;
      std::string label = read_word();
      if (cur_.peek() != ':') {
        fail(ll, lc, QueryErrorKind::Syntax,
             "expected prefix label ending in ':'");
      }
      cur_.advance();
      cur_.skip_ws();
      if (cur_.peek() != '<') {
        fail(cur_.line, cur_.col, QueryErrorKind::Syntax,
             "expected <IRI> after PREFIX");
      }
      prefixes_[label] = read_iriref();
    }
  }

  std::string read_iriref() {
    int sl = cur_.line, sc = cur_.col;
    cur_.advance();  // '<'
    std::string iri;
    for (;;) {
      if (cur_.eof()) {
        fail(sl, sc, QueryErrorKind::Syntax, "unterminated IRI");
      }
      char c = cur_.advance();
      if (c == '>') return iri;
      if (std::isspace(static_cast<unsigned char>(c))) {
        fail(sl, sc, QueryErrorKind::Syntax, "whitespace inside IRI");
      }
      iri += c;
    }
  }

  void expect_keyword(const std::string& kw) {
    cur_.skip_ws();
    int sl = cur_.line, sc = cur_.col;
    std::string word = read_word();
    if (upper(word) != kw) {
      reject_if_unsupported(word, sl, sc);
      fail(sl, sc, QueryErrorKind::Syntax,
           "expected " + kw + (word.empty() ? "" : ", got '" + word + "'"));
    }
  }

  void parse_projection() {
    bool any = false;
    for (;;) {
      cur_.skip_ws();
      if (cur_.peek() == '*') {
        fail(cur_.line, cur_.col, QueryErrorKind::UnsupportedFeature,
             "unsupported: SELECT *");
      }
      if (cur_.peek() != '?' && cur_.peek() != '$') break;
      cur_.advance();
      int sl = cur_.line, sc = cur_.col;
      std::string name = read_word();
      if (name.empty()) {
        fail(sl, sc, QueryErrorKind::Syntax, "empty variable name");
      }
      query_.projected.push_back(name);
      any = true;
    }
    if (!any) {
      fail(cur_.line, cur_.col, QueryErrorKind::Syntax,
           "expected at least one projected variable");
    }
  }

  void parse_group() {
    cur_.skip_ws();
    if (cur_.peek() != '{') {
      fail(cur_.line, cur_.col, QueryErrorKind::Syntax, "expected '{'");
    }
    cur_.advance();
    for (;;) {
      cur_.skip_ws();
      if (cur_.peek() == '}') {
        cur_.advance();
        return;
      }
      if (cur_.eof()) {
        fail(cur_.line, cur_.col, QueryErrorKind::Syntax, "expected '}'");
      }
      parse_pattern();
      cur_.skip_ws();
      if (cur_.peek() == '.') {
        cur_.advance();
        continue;
      }
      if (cur_.peek() == ';' || cur_.peek() == ',') {
        fail(cur_.line, cur_.col, QueryErrorKind::UnsupportedFeature,
             "unsupported: predicate-object lists in patterns");
      }
      cur_.skip_ws();
      if (cur_.peek() == '}') {
        cur_.advance();
        return;
      }
      fail(cur_.line, cur_.col, QueryErrorKind::Syntax,
           "expected '.' or '}' after triple pattern");
    }
  }

  void parse_pattern() {
    Term s = parse_term();
    Term p = parse_term();
    Term o = parse_term();
    if (s.is_literal()) {
      fail(cur_.line, cur_.col, QueryErrorKind::Syntax,
           "literal subjects are not allowed");
    }
    if (!p.is_iri() && !p.is_variable()) {
      fail(cur_.line, cur_.col, QueryErrorKind::Syntax,
           "pattern predicate must be an IRI or a variable");
    }
    query_.patterns.push_back({std::move(s), std::move(p), std::move(o)});
  }

  Term parse_term() {
    cur_.skip_ws();
    int sl = cur_.line, sc = cur_.col;
    char c = cur_.peek();
    if (cur_.eof()) {
      fail(sl, sc, QueryErrorKind::Syntax, "unexpected end of query");
    }
    if (c == '?' || c == '$') {
      cur_.advance();
      std::string name = read_word();
      if (name.empty()) {
        fail(sl, sc, QueryErrorKind::Syntax, "empty variable name");
      }
      return Term::variable(name);
    }
    if (c == '<') return Term::iri(read_iriref());
    if (c == '"' || c == '\'') return parse_string_literal();
    if (c == '{' || c == '}' || c == '(' || c == '[') {
      if (c == '(' || c == '[') {
        fail(sl, sc, QueryErrorKind::UnsupportedFeature,
             c == '(' ? "unsupported: collections"
                      : "unsupported: blank node property lists");
      }
      fail(sl, sc, QueryErrorKind::Syntax,
           std::string("unexpected '") + c + "'");
    }
    if (c == '_' && cur_.peek(1) == ':') {
      cur_.advance();
      cur_.advance();
      std::string label = read_word();
      return Term::blank(label);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
      return parse_numeric_literal(sl, sc);
    }
    // prefixed name or keyword
    std::string word;
    while (!cur_.eof() &&
           (is_name_char(cur_.peek()) || cur_.peek() == '.')) {
      if (cur_.peek() == '.' && !(is_name_char(cur_.peek(1)) ||
                                  cur_.peek(1) == ':')) {
        break;
      }
      word += cur_.advance();
    }
    if (cur_.peek() == ':') {
      cur_.advance();
      std::string local;
      for (;;) {
        char lc = cur_.peek();
        if (is_name_char(lc) || lc == '%') {
          local += cur_.advance();
          continue;
        }
        if (lc == '.' && (is_name_char(cur_.peek(1)) || cur_.peek(1) == '%')) {
          local += cur_.advance();
          continue;
        }
        break;
      }
      auto it = prefixes_.find(word);
      if (it == prefixes_.end()) {
        fail(sl, sc, QueryErrorKind::UnknownPrefix,
             "unknown prefix: " + word + ":");
      }
      return Term::iri(it->second + local);
    }
    if (word == "a") return Term::iri(kRdfType);
    if (word == "true" || word == "false") {
      return Term::literal(word, xsd::boolean);
    }
    reject_if_unsupported(word, sl, sc);
    fail(sl, sc, QueryErrorKind::Syntax,
         word.empty() ? "expected a term"
                      : "expected a term, got bare word '" + word + "'");
  }

  Term parse_string_literal() {
    char quote = cur_.advance();
    int sl = cur_.line, sc = cur_.col;
    std::string value;
    for (;;) {
      if (cur_.eof()) {
        fail(sl, sc, QueryErrorKind::Syntax, "unterminated string");
      }
      char c = cur_.advance();
      if (c == quote) break;
      if (c == '\\') {
        char e = cur_.eof() ? '\0' : cur_.advance();
        switch (e) {
          case 't': value += '\t'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          default:
            fail(cur_.line, cur_.col, QueryErrorKind::Syntax,
                 "unknown string escape");
        }
        continue;
      }
      value += c;
    }
    if (cur_.peek() == '@') {
      cur_.advance();
      std::string lang = read_word();
      return Term::literal(value, "", lang);
    }
    if (cur_.peek() == '^' && cur_.peek(1) == '^') {
      cur_.advance();
      cur_.advance();
      Term dt = parse_term();
      if (!dt.is_iri()) {
        fail(cur_.line, cur_.col, QueryErrorKind::Syntax,
             "datatype must be an IRI");
      }
      return Term::literal(value, dt.value);
    }
    return Term::literal(value);
  }

  Term parse_numeric_literal(int sl, int sc) {
    std::string text;
    if (cur_.peek() == '+' || cur_.peek() == '-') text += cur_.advance();
    bool dot = false, digits = false;
    while (!cur_.eof()) {
      char c = cur_.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = true;
        text += cur_.advance();
      } else if (c == '.' && !dot &&
                 std::isdigit(static_cast<unsigned char>(cur_.peek(1)))) {
        dot = true;
        text += cur_.advance();
      } else {
        break;
      }
    }
    if (!digits) {
      fail(sl, sc, QueryErrorKind::Syntax, "malformed number");
    }
    return Term::literal(text, dot ? xsd::decimal : xsd::integer);
  }

  void validate() {
    std::set<std::string> in_patterns;
    for (const TriplePattern& p : query_.patterns) {
      for (const Term* t : {&p.subject, &p.predicate, &p.object}) {
        if (t->is_variable()) in_patterns.insert(t->value);
      }
    }
    for (const std::string& v : query_.projected) {
      if (!in_patterns.count(v)) {
        fail(1, 1, QueryErrorKind::Syntax,
             "projected variable ?" + v + " does not occur in any pattern");
      }
    }
  }
};

TriplePattern substitute(const TriplePattern& p, const Binding& binding) {
  auto subst = [&](const Term& t) {
    if (t.is_variable()) {
      auto it = binding.find(t.value);
      if (it != binding.end()) return it->second;
    }
    return t;
  };
  return {subst(p.subject), subst(p.predicate), subst(p.object)};
}

TriplePattern wildcards_only(const TriplePattern& p) {
  auto wild = [](const Term& t, const char* name) {
    return t.is_variable() ? Term::variable(name) : t;
  };
  // Distinct placeholder names so repeated-variable constraints do not
  // shrink the selectivity estimate.
  return {wild(p.subject, "_s"), wild(p.predicate, "_p"),
          wild(p.object, "_o")};
}

}  // namespace

QueryParseError::QueryParseError(int line, int column, QueryErrorKind kind,
                                 const std::string& message)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      kind_(kind),
      message_(message) {}

SelectQuery parse_query(std::string_view text,
                        const PrefixMap& default_prefixes) {
  return QueryParser(text, default_prefixes).run();
}

ResultTable execute(const Graph& graph, const SelectQuery& query) {
  // Greedy static reordering by estimated selectivity.
  std::vector<std::size_t> order(query.patterns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> estimate(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    estimate[i] = graph.count_matching(wildcards_only(query.patterns[i]));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return estimate[a] < estimate[b];
                   });

  std::vector<Binding> solutions = {Binding{}};
  for (std::size_t idx : order) {
    std::vector<Binding> next;
    for (const Binding& partial : solutions) {
      TriplePattern bound = substitute(query.patterns[idx], partial);
      for (Binding& found : graph.match(bound)) {
        Binding merged = partial;
        merged.merge(found);
        next.push_back(std::move(merged));
      }
    }
    solutions = std::move(next);
    if (solutions.empty()) break;
  }

  ResultTable table;
  table.header = query.projected;
  // Ground queries keep their single empty solution; it projects to an
  // empty row only when nothing is projected, which parse_query forbids,
  // so projected variables are always bound here.
  for (const Binding& solution : solutions) {
    std::vector<Term> row;
    row.reserve(table.header.size());
    for (const std::string& var : table.header) {
      row.push_back(solution.at(var));
    }
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const std::vector<Term>& a, const std::vector<Term>& b) {
                     for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
                       std::string sa = a[i].to_string();
                       std::string sb = b[i].to_string();
                       if (sa != sb) return sa < sb;
                     }
                     return a.size() < b.size();
                   });
  return table;
}

}  // namespace simplan
