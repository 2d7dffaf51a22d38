#pragma once

// Brute-force reference evaluator and random inputs for the query engine.
// Every variable ranges over every term of the graph; a candidate row survives
// when all patterns are present as triples and every filter holds.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "dmcc/query.hpp"

namespace dmcc::testing {

using OracleRow = std::vector<std::string>;

namespace oracle_detail {

inline std::optional<double> number(const rdf::Term& t) {
  if (!t.is_literal()) return std::nullopt;
  const auto& l = t.as_literal();
  static const std::regex integer("[+-]?[0-9]+");
  static const std::regex decimal("[+-]?[0-9]*(\\.[0-9]+)?");
  static const std::regex dbl("[+-]?([0-9]+(\\.[0-9]*)?|\\.[0-9]+)([eE][+-]?[0-9]+)?");
  bool ok = false;
  if (l.datatype() == rdf::kXsdInteger) ok = std::regex_match(l.lexical(), integer);
  if (l.datatype() == rdf::kXsdDecimal) ok = std::regex_match(l.lexical(), decimal) && l.lexical().find_first_of("0123456789") != std::string::npos;
  if (l.datatype() == rdf::kXsdDouble) ok = std::regex_match(l.lexical(), dbl);
  if (!ok) return std::nullopt;
  return std::strtod(l.lexical().c_str(), nullptr);
}

inline bool stringish(const rdf::Term& t) {
  return t.is_literal() &&
         (t.as_literal().datatype() == rdf::kXsdString || t.as_literal().datatype() == rdf::kRdfLangString);
}

// False on a type error as well as on a plain mismatch.
inline bool holds(query::FilterOp op, const rdf::Term& a, const rdf::Term& b) {
  using query::FilterOp;
  const auto x = number(a), y = number(b);
  if (op == FilterOp::kEq) return (x && y) ? *x == *y : a == b;
  if (op == FilterOp::kNe) return (x && y) ? *x != *y : !(a == b);
  if (op == FilterOp::kContains)
    return a.is_literal() && b.is_literal() && a.as_literal().lexical().find(b.as_literal().lexical()) != std::string::npos;
  int c;
  if (x && y) {
    c = *x < *y ? -1 : (*y < *x ? 1 : 0);
  } else if (stringish(a) && stringish(b)) {
    c = a.as_literal().lexical().compare(b.as_literal().lexical());
  } else {
    return false;
  }
  switch (op) {
    case FilterOp::kLt: return c < 0;
    case FilterOp::kLe: return c <= 0;
    case FilterOp::kGt: return c > 0;
    case FilterOp::kGe: return c >= 0;
    default: return false;
  }
}

}  // namespace oracle_detail

// Projected rows rendered in N-Triples form, sorted; duplicates kept unless
// the query is DISTINCT. ORDER BY and LIMIT are ignored.
inline std::vector<OracleRow> oracle_rows(const rdf::Graph& g, const query::SelectQuery& q) {
  const auto vars = query::pattern_variables(q);
  const auto term_set = g.terms();
  const std::vector<rdf::Term> domain(term_set.begin(), term_set.end());
  std::vector<OracleRow> out;
  if (domain.empty()) return out;

  auto lookup = [&](const std::vector<std::size_t>& pick, const query::Slot& s) -> rdf::Term {
    if (const auto* t = std::get_if<rdf::Term>(&s)) return *t;
    const auto& v = std::get<query::Variable>(s);
    const auto i = std::find(vars.begin(), vars.end(), v) - vars.begin();
    return domain[pick[i]];
  };

  std::vector<std::size_t> pick(vars.size(), 0);
  for (;;) {
    bool ok = true;
    for (const auto& p : q.patterns) {
      const auto s = lookup(pick, p.subject), pr = lookup(pick, p.predicate), o = lookup(pick, p.object);
      if (s.is_literal() || !pr.is_iri() || !g.contains(rdf::Triple(s, pr, o))) {
        ok = false;
        break;
      }
    }
    for (const auto& f : q.filters) {
      if (!ok) break;
      ok = oracle_detail::holds(f.op, lookup(pick, f.left), lookup(pick, f.right));
    }
    if (ok) {
      OracleRow row;
      for (const auto& v : q.projected) row.push_back(lookup(pick, v).to_ntriples());
      out.push_back(std::move(row));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == domain.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  if (q.distinct) out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<OracleRow> rendered_rows(const query::ResultSet& rs) {
  std::vector<OracleRow> out;
  for (const auto& r : rs.rows) {
    OracleRow row;
    for (const auto& t : r) row.push_back(t.to_ntriples());
    out.push_back(std::move(row));
  }
  return out;
}

inline constexpr const char* kOracleNs = "http://example.org/q#";

// Small vocabulary so that joins and repeated terms are common.
inline rdf::Graph random_query_graph(std::mt19937& rng, std::size_t max_triples) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
  const std::string ns = kOracleNs;
  std::vector<rdf::Term> nodes, preds, objects;
  for (int i = 0; i < 6; ++i) nodes.push_back(rdf::Term::blank("n" + std::to_string(i)));
  for (int i = 0; i < 5; ++i) nodes.push_back(rdf::Term::iri(ns + "e" + std::to_string(i)));
  for (int i = 0; i < 4; ++i) preds.push_back(rdf::Term::iri(ns + "p" + std::to_string(i)));
  preds.push_back(rdf::Term::iri(std::string(rdf::kRdfType)));
  objects = nodes;
  objects.push_back(rdf::Term::iri(ns + "C0"));
  objects.push_back(rdf::Term::iri(ns + "C1"));
  for (const char* v : {"0", "3", "5", "7", "12", "-2"}) objects.push_back(rdf::Term(rdf::Literal(v, std::string(rdf::kXsdInteger))));
  for (const char* v : {"3.0", "3.50", "0.10", "4.99", "-0.5"}) objects.push_back(rdf::Term(rdf::Literal::decimal(v)));
  for (const char* v : {"alpha", "alphabet", "beta", "5"}) objects.push_back(rdf::Term::literal(v));
  objects.push_back(rdf::Term(rdf::Literal::lang_string("alpha", "en")));
  objects.push_back(rdf::Term(rdf::Literal::boolean(true)));

  rdf::Graph g;
  const std::size_t n = pick(max_triples + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = preds[pick(preds.size())];
    if (p.as_iri().value() == rdf::kRdfType) {
      g.insert(nodes[pick(nodes.size())], p, rdf::Term::iri(ns + "C" + std::to_string(pick(2))));
    } else {
      g.insert(nodes[pick(nodes.size())], p, objects[pick(objects.size())]);
    }
  }
  return g;
}

// Templates over the random vocabulary, each with at most three variables.
inline std::vector<std::string> oracle_templates() {
  const std::string pre = "PREFIX q: <" + std::string(kOracleNs) + ">\n";
  return {
      pre + "SELECT ?s WHERE { ?s q:p0 ?o }",
      pre + "SELECT ?s ?o WHERE { ?s q:p0 ?x . ?x q:p1 ?o }",
      pre + "SELECT * WHERE { ?s ?p ?o . FILTER(?o > 4) }",
      pre + "SELECT ?s WHERE { ?s a q:C0 ; q:p2 ?v . FILTER(?v <= 3.5) }",
      pre + "SELECT ?a ?b WHERE { ?a q:p0 ?b . ?b q:p0 ?a }",
      pre + "SELECT ?s ?v WHERE { ?s q:p1 ?v . FILTER(contains(?v, \"alpha\")) }",
      pre + "SELECT ?p WHERE { ?s ?p ?s }",
      pre + "SELECT DISTINCT ?s WHERE { ?s q:p3 _:b . _:b q:p0 ?o }",
      pre + "SELECT ?x ?v ?w WHERE { ?x q:p2 ?v ; q:p3 ?w . FILTER(?v < ?w) }",
      pre + "SELECT ?s ?o WHERE { ?s q:p1 ?o , ?o . FILTER(?o != 3) FILTER(?o >= \"alpha\") } ORDER BY DESC(?o)",
  };
}

}  // namespace dmcc::testing
