#include "simplan/graph.hpp"

#include <algorithm>
#include <cctype>

namespace simplan {

bool Graph::insert(Triple triple) {
  check_triple(triple);
  auto [it, inserted] = triples_.insert(triple);
  if (!inserted) return false;
  spo_[it->subject][it->predicate].insert(it->object);
  pos_[it->predicate][it->object].insert(it->subject);
  osp_[it->object][it->subject].insert(it->predicate);
  return true;
}

bool Graph::contains(const Triple& triple) const {
  return triples_.count(triple) > 0;
}

namespace {

/// Binds a pattern variable, rejecting inconsistent repeated occurrences.
bool bind(Binding& b, const Term& var, const Term& value) {
  auto [it, inserted] = b.emplace(var.value, value);
  return inserted || it->second == value;
}

bool unify(const TriplePattern& p, const Triple& t, Binding& out) {
  const std::pair<const Term*, const Term*> slots[3] = {
      {&p.subject, &t.subject}, {&p.predicate, &t.predicate},
      {&p.object, &t.object}};
  for (auto [pat, val] : slots) {
    if (pat->is_variable()) {
      if (!bind(out, *pat, *val)) return false;
    } else if (*pat != *val) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Binding> Graph::match(const TriplePattern& pattern) const {
  std::vector<Binding> out;
  auto consider = [&](const Triple& t) {
    Binding b;
    if (unify(pattern, t, b)) out.push_back(std::move(b));
  };

  const bool sv = pattern.subject.is_variable();
  const bool pv = pattern.predicate.is_variable();
  const bool ov = pattern.object.is_variable();

  if (!sv) {
    auto s_it = spo_.find(pattern.subject);
    if (s_it == spo_.end()) return out;
    if (!pv) {
      auto p_it = s_it->second.find(pattern.predicate);
      if (p_it == s_it->second.end()) return out;
      if (!ov) {
        if (p_it->second.count(pattern.object)) {
          consider({pattern.subject, pattern.predicate, pattern.object});
        }
      } else {
        for (const Term& o : p_it->second) {
          consider({pattern.subject, pattern.predicate, o});
        }
      }
    } else if (!ov) {
      // S and O fixed: walk (O,S) -> {P} in the OSP index.
      auto o_it = osp_.find(pattern.object);
      if (o_it == osp_.end()) return out;
      auto si = o_it->second.find(pattern.subject);
      if (si == o_it->second.end()) return out;
      for (const Term& p : si->second) {
        consider({pattern.subject, p, pattern.object});
      }
    } else {
      for (const auto& [p, objects] : s_it->second) {
        for (const Term& o : objects) consider({pattern.subject, p, o});
      }
    }
    return out;
  }

  if (!pv) {
    auto p_it = pos_.find(pattern.predicate);
    if (p_it == pos_.end()) return out;
    if (!ov) {
      auto o_it = p_it->second.find(pattern.object);
      if (o_it == p_it->second.end()) return out;
      for (const Term& s : o_it->second) {
        consider({s, pattern.predicate, pattern.object});
      }
    } else {
      for (const auto& [o, subjects] : p_it->second) {
        for (const Term& s : subjects) consider({s, pattern.predicate, o});
      }
    }
    return out;
  }

  if (!ov) {
    auto o_it = osp_.find(pattern.object);
    if (o_it == osp_.end()) return out;
    for (const auto& [s, preds] : o_it->second) {
      for (const Term& p : preds) consider({s, p, pattern.object});
    }
    return out;
  }

  for (const Triple& t : triples_) consider(t);
  return out;
}

std::size_t Graph::count_matching(const TriplePattern& pattern) const {
  return match(pattern).size();
}

std::vector<Term> Graph::objects_of(const Term& subject,
                                    const Term& predicate) const {
  std::vector<Term> out;
  auto s_it = spo_.find(subject);
  if (s_it == spo_.end()) return out;
  auto p_it = s_it->second.find(predicate);
  if (p_it == s_it->second.end()) return out;
  out.assign(p_it->second.begin(), p_it->second.end());
  return out;
}

std::vector<Term> Graph::subjects_of(const Term& predicate,
                                     const Term& object) const {
  std::vector<Term> out;
  auto p_it = pos_.find(predicate);
  if (p_it == pos_.end()) return out;
  auto o_it = p_it->second.find(object);
  if (o_it == p_it->second.end()) return out;
  out.assign(o_it->second.begin(), o_it->second.end());
  return out;
}

void Graph::add_prefix(const std::string& label, const std::string& ns) {
  prefixes_[label] = ns;
}

std::string expand_curie(const PrefixMap& prefixes, const std::string& curie) {
  if (curie.size() >= 2 && curie.front() == '<' && curie.back() == '>') {
    return curie.substr(1, curie.size() - 2);
  }
  auto colon = curie.find(':');
  if (colon == std::string::npos) {
    throw UnknownPrefixError("not a prefixed name or IRI: " + curie);
  }
  std::string prefix = curie.substr(0, colon);
  auto it = prefixes.find(prefix);
  if (it == prefixes.end()) {
    throw UnknownPrefixError("unknown prefix: " + prefix);
  }
  return it->second + curie.substr(colon + 1);
}

namespace {
bool is_plain_local_name(std::string_view local) {
  if (local.empty()) return true;  // "pfx:" is a valid prefixed name
  auto ok_start = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  if (!ok_start(local.front()) || local.back() == '.') return false;
  for (char c : local) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return true;
}
}  // namespace

std::string compact_iri(const PrefixMap& prefixes, const std::string& iri) {
  const std::string* best_label = nullptr;
  const std::string* best_ns = nullptr;
  for (const auto& [label, ns] : prefixes) {
    if (!ns.empty() && iri.starts_with(ns) &&
        (!best_ns || ns.size() > best_ns->size())) {
      best_label = &label;
      best_ns = &ns;
    }
  }
  if (best_ns) {
    std::string local = iri.substr(best_ns->size());
    if (is_plain_local_name(local)) return *best_label + ":" + local;
  }
  return "<" + iri + ">";
}

}  // namespace simplan
