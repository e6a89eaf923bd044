#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simplan {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term may not appear where it was used (variable in a stored triple,
/// literal subject, relative IRI, ...).
class MalformedTermError : public Error {
 public:
  using Error::Error;
};

enum class TermKind { Iri, Literal, BlankNode, Variable };

namespace xsd {
inline const std::string ns = "http://www.w3.org/2001/XMLSchema#";
inline const std::string string_ = ns + "string";
inline const std::string integer = ns + "integer";
inline const std::string decimal = ns + "decimal";
inline const std::string double_ = ns + "double";
inline const std::string boolean = ns + "boolean";
}  // namespace xsd

/// One RDF-style term. `value` holds the IRI, the literal's lexical form,
/// the blank-node label or the variable name depending on `kind`.
/// Variables only ever occur inside patterns, never inside a stored graph.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;
  std::string datatype;  // literals only; empty means xsd:string
  std::string lang;      // literals only

  static Term iri(std::string v);
  static Term literal(std::string lexical, std::string datatype = "",
                      std::string lang = "");
  static Term blank(std::string label);
  static Term variable(std::string name);

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_literal() const { return kind == TermKind::Literal; }
  bool is_blank() const { return kind == TermKind::BlankNode; }
  bool is_variable() const { return kind == TermKind::Variable; }

  /// Decoded numeric value when this is a literal of a recognized xsd
  /// numeric datatype (or a plain integer/decimal/double shorthand).
  std::optional<double> numeric_value() const;

  /// Canonical N-Triples-like rendering ("<iri>", "\"lex\"^^<dt>", "_:b",
  /// "?v"). Used for deterministic ordering and diagnostics.
  std::string to_string() const;

  friend auto operator<=>(const Term&, const Term&) = default;
};

/// True iff `iri` is an absolute IRI, i.e. starts with a scheme
/// ([A-Za-z][A-Za-z0-9+.-]*) followed by ':'.
bool is_absolute_iri(std::string_view iri);

/// True for datatype IRIs whose literals carry a decodable decimal value.
bool is_numeric_datatype(std::string_view datatype);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Like a Triple but any position may also hold a variable.
struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  bool is_ground() const {
    return !subject.is_variable() && !predicate.is_variable() &&
           !object.is_variable();
  }
};

/// Throws MalformedTermError unless the triple satisfies the storage
/// invariants: subject iri|blank, predicate iri, object iri|blank|literal,
/// all IRIs absolute.
void check_triple(const Triple& t);

}  // namespace simplan
