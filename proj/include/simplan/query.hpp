#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simplan/graph.hpp"

namespace simplan {

enum class QueryErrorKind { Syntax, UnknownPrefix, UnsupportedFeature };

class QueryParseError : public Error {
 public:
  QueryParseError(int line, int column, QueryErrorKind kind,
                  const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  QueryErrorKind error_kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  QueryErrorKind kind_;
  std::string message_;
};

/// SELECT query over one basic graph pattern. Every projected variable
/// occurs in at least one pattern.
struct SelectQuery {
  std::vector<std::string> projected;
  std::vector<TriplePattern> patterns;
};

/// Bag of solutions; each row binds exactly the header variables, in header
/// order. Row order is deterministic for a fixed graph and query.
struct ResultTable {
  std::vector<std::string> header;
  std::vector<std::vector<Term>> rows;
};

/// Parses `PREFIX* SELECT ?v... WHERE { pattern ('.' pattern)* '.'? }`.
/// Prefixed names resolve against the query's own PREFIX declarations,
/// falling back to `default_prefixes` (normally the loaded graph's table).
/// SPARQL features outside the subset (FILTER, OPTIONAL, UNION, ...) raise
/// QueryParseError with kind UnsupportedFeature naming the construct.
SelectQuery parse_query(std::string_view text,
                        const PrefixMap& default_prefixes = {});

/// Basic-graph-pattern join with bag semantics. Patterns are greedily
/// reordered by ascending match-count estimate; rows are sorted by the
/// canonical forms of the projected terms, so output order is reproducible
/// and independent of the join order.
ResultTable execute(const Graph& graph, const SelectQuery& query);

}  // namespace simplan
