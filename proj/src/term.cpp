#include "simplan/term.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace simplan {

Term Term::iri(std::string v) { return Term{TermKind::Iri, std::move(v), "", ""}; }

Term Term::literal(std::string lexical, std::string datatype, std::string lang) {
  return Term{TermKind::Literal, std::move(lexical), std::move(datatype),
              std::move(lang)};
}

Term Term::blank(std::string label) {
  return Term{TermKind::BlankNode, std::move(label), "", ""};
}

Term Term::variable(std::string name) {
  return Term{TermKind::Variable, std::move(name), "", ""};
}

bool is_absolute_iri(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) {
    return false;
  }
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '.' &&
        c != '-') {
      return false;
    }
  }
  return false;
}

bool is_numeric_datatype(std::string_view datatype) {
  if (!datatype.starts_with(xsd::ns)) return false;
  std::string_view local = datatype.substr(xsd::ns.size());
  static constexpr std::array<std::string_view, 17> kNumeric = {
      "integer",          "decimal",         "double",
      "float",            "int",             "long",
      "short",            "byte",            "nonNegativeInteger",
      "nonPositiveInteger", "negativeInteger", "positiveInteger",
      "unsignedLong",     "unsignedInt",     "unsignedShort",
      "unsignedByte",     "unsignedInteger"};
  for (auto n : kNumeric) {
    if (local == n) return true;
  }
  return false;
}

std::optional<double> Term::numeric_value() const {
  if (kind != TermKind::Literal || !lang.empty()) return std::nullopt;
  if (!datatype.empty() && !is_numeric_datatype(datatype)) return std::nullopt;
  if (datatype.empty()) return std::nullopt;
  const char* first = value.data();
  const char* last = first + value.size();
  if (first != last && *first == '+') ++first;  // from_chars rejects '+'
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return out;
}

namespace {
std::string escape_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}
}  // namespace

std::string Term::to_string() const {
  switch (kind) {
    case TermKind::Iri:
      return "<" + value + ">";
    case TermKind::BlankNode:
      return "_:" + value;
    case TermKind::Variable:
      return "?" + value;
    case TermKind::Literal: {
      std::string out = "\"" + escape_literal(value) + "\"";
      if (!lang.empty()) {
        out += "@" + lang;
      } else if (!datatype.empty() && datatype != xsd::string_) {
        out += "^^<" + datatype + ">";
      }
      return out;
    }
  }
  return {};
}

void check_triple(const Triple& t) {
  auto kind_name = [](TermKind k) {
    switch (k) {
      case TermKind::Iri: return "iri";
      case TermKind::Literal: return "literal";
      case TermKind::BlankNode: return "blank node";
      case TermKind::Variable: return "variable";
    }
    return "?";
  };
  if (t.subject.is_variable() || t.predicate.is_variable() ||
      t.object.is_variable()) {
    throw MalformedTermError("variables may not appear in a stored triple");
  }
  if (!t.subject.is_iri() && !t.subject.is_blank()) {
    throw MalformedTermError(std::string("triple subject must be an iri or a "
                                         "blank node, got ") +
                             kind_name(t.subject.kind));
  }
  if (!t.predicate.is_iri()) {
    throw MalformedTermError(std::string("triple predicate must be an iri, "
                                         "got ") +
                             kind_name(t.predicate.kind));
  }
  for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
    if (term->is_iri() && !is_absolute_iri(term->value)) {
      throw MalformedTermError("iri is not absolute: " + term->value);
    }
  }
}

}  // namespace simplan
