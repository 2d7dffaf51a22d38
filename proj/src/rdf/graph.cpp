#include "dmcc/rdf/graph.hpp"

#include <stdexcept>

namespace dmcc::rdf {
namespace {

bool pn_chars_base(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool pn_chars(char c) { return pn_chars_base(c) || c == '_' || c == '-' || (c >= '0' && c <= '9'); }

}  // namespace

bool is_valid_prefix(std::string_view prefix) {
  if (prefix.empty()) return true;
  if (!pn_chars_base(prefix.front())) return false;
  if (prefix.back() == '.') return false;
  for (char c : prefix)
    if (!pn_chars(c) && c != '.') return false;
  return true;
}

bool Graph::insert(Triple t) { return triples_.insert(std::move(t)).second; }

void Graph::merge(const Graph& other) {
  for (const auto& t : other) triples_.insert(t);
  for (const auto& [p, ns] : other.prefixes_) prefixes_.emplace(p, ns);
}

void Graph::set_prefix(const std::string& prefix, const std::string& ns) {
  if (!is_valid_prefix(prefix)) throw std::invalid_argument("invalid prefix '" + prefix + "'");
  if (!Iri::is_valid(ns)) throw std::invalid_argument("invalid namespace IRI '" + ns + "'");
  prefixes_[prefix] = ns;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  auto agrees = [&](const Triple& t) {
    return (!p || t.predicate == *p) && (!o || t.object == *o);
  };
  if (s) {
    // Triples are ordered by subject first, so a bound subject is a range.
    auto [first, last] = triples_.equal_range(*s);
    for (auto it = first; it != last; ++it)
      if (agrees(*it)) out.push_back(*it);
    return out;
  }
  for (const auto& t : triples_)
    if (agrees(t)) out.push_back(t);
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Term& p) const {
  std::vector<Term> out;
  for (auto& t : match(s, p, std::nullopt)) out.push_back(std::move(t.object));
  return out;
}

std::vector<Term> Graph::subjects(const Term& p, const Term& o) const {
  std::vector<Term> out;
  for (auto& t : match(std::nullopt, p, o)) out.push_back(std::move(t.subject));
  return out;
}

std::optional<Term> Graph::object(const Term& s, const Term& p) const {
  auto objs = objects(s, p);
  if (objs.empty()) return std::nullopt;
  return objs.front();
}

bool Graph::has_subject(const Term& s) const {
  return triples_.find(s) != triples_.end();
}

bool Graph::mentions(const Term& t) const {
  if (has_subject(t)) return true;
  for (const auto& tr : triples_)
    if (tr.predicate == t || tr.object == t) return true;
  return false;
}

std::set<Term> Graph::blank_nodes() const {
  std::set<Term> out;
  for (const auto& t : triples_) {
    if (t.subject.is_blank()) out.insert(t.subject);
    if (t.object.is_blank()) out.insert(t.object);
  }
  return out;
}

std::set<Term> Graph::terms() const {
  std::set<Term> out;
  for (const auto& t : triples_) {
    out.insert(t.subject);
    out.insert(t.predicate);
    out.insert(t.object);
  }
  return out;
}

Graph with_blank_prefix(const Graph& g, std::string_view prefix) {
  auto rename = [&](const Term& t) { return t.is_blank() ? Term::blank(std::string(prefix) + t.as_blank().label()) : t; };
  Graph out;
  for (const auto& [p, ns] : g.prefixes()) out.set_prefix(p, ns);
  for (const auto& t : g) out.insert(rename(t.subject), t.predicate, rename(t.object));
  return out;
}

}  // namespace dmcc::rdf
