#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "simplan/term.hpp"

namespace simplan {

class UnknownPrefixError : public Error {
 public:
  using Error::Error;
};

/// prefix label (without the ':') -> namespace IRI
using PrefixMap = std::map<std::string, std::string>;

/// variable name (without the '?') -> bound term
using Binding = std::map<std::string, Term>;

/// In-memory triple store with set semantics and SPO/POS/OSP indexes.
///
/// Intended use is load-then-read: a single writer fills the graph, after
/// which any number of threads may match/iterate concurrently.
class Graph {
 public:
  /// Inserts a triple. Returns true when the triple was not present yet.
  /// Throws MalformedTermError for triples violating storage invariants.
  bool insert(Triple triple);

  bool contains(const Triple& triple) const;
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  /// All bindings of the pattern's variables against stored triples.
  /// A ground pattern yields zero or one empty binding. Repeated variables
  /// must unify. Order is deterministic for a fixed graph.
  std::vector<Binding> match(const TriplePattern& pattern) const;

  /// Number of triples matching the pattern's constant positions (variables
  /// treated as wildcards; repeated-variable constraints still apply).
  std::size_t count_matching(const TriplePattern& pattern) const;

  /// Convenience single-position lookups built on match().
  std::vector<Term> objects_of(const Term& subject, const Term& predicate) const;
  std::vector<Term> subjects_of(const Term& predicate, const Term& object) const;

  /// Registers a prefix. Re-registering the same label with a different
  /// namespace overwrites (Turtle redefinition semantics within one
  /// document); cross-file conflicts are the loader's concern.
  void add_prefix(const std::string& label, const std::string& ns);
  const PrefixMap& prefixes() const { return prefixes_; }

  const std::set<Triple>& triples() const { return triples_; }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

 private:
  using Index = std::map<Term, std::map<Term, std::set<Term>>>;

  std::set<Triple> triples_;
  Index spo_;  // S -> P -> {O}
  Index pos_;  // P -> O -> {S}
  Index osp_;  // O -> S -> {P}
  PrefixMap prefixes_;
};

/// Expands "pfx:Local" using the prefix map. A term already in "<iri>" form
/// or an absolute IRI is returned unchanged. Throws UnknownPrefixError.
std::string expand_curie(const PrefixMap& prefixes, const std::string& curie);

/// Longest-namespace compaction to "pfx:Local"; falls back to "<iri>" when
/// no registered namespace covers the IRI or the remainder is not a valid
/// local name.
std::string compact_iri(const PrefixMap& prefixes, const std::string& iri);

}  // namespace simplan
