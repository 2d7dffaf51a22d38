#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dmcc/rdf/term.hpp"

namespace dmcc::rdf {

// prefix -> namespace IRI. The empty string is the default prefix.
using PrefixMap = std::map<std::string, std::string>;

// True when `prefix` is empty or matches the Turtle PN_PREFIX production
// (restricted to ASCII).
bool is_valid_prefix(std::string_view prefix);

// Orders triples by (s, p, o) and allows lookup by subject alone.
struct TripleOrder {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const { return a < b; }
  bool operator()(const Triple& a, const Term& s) const { return a.subject < s; }
  bool operator()(const Term& s, const Triple& b) const { return s < b.subject; }
};

// A set of triples plus the prefix map used to read or write it. Graphs are
// built then treated as read-only; every const member is safe to call from
// several threads at once.
class Graph {
 public:
  using const_iterator = std::set<Triple, TripleOrder>::const_iterator;

  Graph() = default;

  // Returns false when the triple was already present.
  bool insert(Triple t);
  bool insert(Term s, Term p, Term o) { return insert(Triple(std::move(s), std::move(p), std::move(o))); }
  bool erase(const Triple& t) { return triples_.erase(t) > 0; }
  // Adds every triple and every prefix not already bound.
  void merge(const Graph& other);

  void set_prefix(const std::string& prefix, const std::string& ns);
  const PrefixMap& prefixes() const { return prefixes_; }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }
  bool contains(const Triple& t) const { return triples_.count(t) > 0; }

  // Every triple agreeing with the bound positions, in (s, p, o) order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  std::vector<Term> objects(const Term& s, const Term& p) const;
  std::vector<Term> subjects(const Term& p, const Term& o) const;
  std::optional<Term> object(const Term& s, const Term& p) const;
  bool has_subject(const Term& s) const;
  // True when the term occurs in any position.
  bool mentions(const Term& t) const;
  std::set<Term> blank_nodes() const;
  std::set<Term> terms() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  std::set<Triple, TripleOrder> triples_;
  PrefixMap prefixes_;
};

// Copy with every blank node label prefixed, so graphs read from separate
// documents never share a blank node by accident.
Graph with_blank_prefix(const Graph& g, std::string_view prefix);

}  // namespace dmcc::rdf
