#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "simplan/graph.hpp"

namespace simplan {

enum class TurtleErrorKind { Lexical, Syntactic, UnknownPrefix };

/// Positioned parse failure; line/column are 1-based and point at the first
/// offending character.
class TurtleParseError : public Error {
 public:
  TurtleParseError(int line, int column, TurtleErrorKind kind,
                   const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  TurtleErrorKind error_kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  TurtleErrorKind kind_;
  std::string message_;
};

/// Parses the Turtle subset used by the instance files: @prefix / one
/// optional @base, prefixed names, <IRI>s, `a`, blank node labels,
/// string/numeric/boolean literals (with language tags and datatypes),
/// predicate-object and object lists. Collections "( )" and anonymous blank
/// nodes "[ ]" are rejected with a positioned syntactic error.
Graph parse_turtle(std::string_view text);

/// Deterministic serialization: prefix directives sorted by label, then
/// statements grouped by subject in (subject, predicate, object) order.
/// The output reparses to an identical graph (triples and prefix map).
std::string serialize_turtle(const Graph& graph);

/// Byte span of one lexical token, [begin, end).
struct TokenSpan {
  std::size_t begin;
  std::size_t end;
};

/// Lexes the document and returns every token's source span. Exposed for
/// mutation tests that splice out single tokens.
std::vector<TokenSpan> tokenize_turtle(std::string_view text);

}  // namespace simplan
