#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dmcc/rdf/graph.hpp"

namespace dmcc::rdf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

class UnknownPrefixError : public ParseError {
 public:
  UnknownPrefixError(std::string prefix, std::size_t line, std::size_t column);
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

// Parses the Turtle subset used by service descriptions: prefix directives,
// prefixed names, <IRI>s, labeled and anonymous blank nodes, predicate and
// object lists, the `a` keyword, string/number/boolean literals with
// datatype and language annotations, and comments.
//
// Collections and quoted triples are rejected with a ParseError. Anonymous
// blank nodes are labeled b0, b1, ... in document order, skipping any label
// the document uses explicitly.
Graph parse_turtle(std::string_view text);

// Deterministic Turtle rendering: prefix directives in prefix order, then one
// block per subject, with subjects, predicates and objects sorted by their
// rendered form.
std::string serialize_turtle(const Graph& g);

// One triple per line in byte-sorted order, absolute IRIs only.
std::string serialize_ntriples(const Graph& g);

// Renders a term for Turtle output, compacting IRIs with `prefixes` when the
// local part needs no escaping.
std::string to_turtle_term(const Term& t, const PrefixMap& prefixes);

}  // namespace dmcc::rdf
