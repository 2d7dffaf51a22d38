#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dmcc/rdf/graph.hpp"

namespace dmcc::query {

using rdf::Graph;
using rdf::Term;

struct Variable {
  std::string name;  // without the leading '?'
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using Slot = std::variant<Term, Variable>;

struct TriplePattern {
  Slot subject;
  Slot predicate;
  Slot object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

enum class FilterOp { kEq, kNe, kLt, kLe, kGt, kGe, kContains };

std::string_view to_string(FilterOp op);

struct FilterExpr {
  FilterOp op = FilterOp::kEq;
  Variable left;
  Slot right = Variable{};
  friend bool operator==(const FilterExpr&, const FilterExpr&) = default;
};

enum class Direction { kAsc, kDesc };

struct OrderBy {
  Variable var;
  Direction direction = Direction::kAsc;
  friend bool operator==(const OrderBy&, const OrderBy&) = default;
};

struct SelectQuery {
  std::vector<Variable> projected;
  bool distinct = false;
  std::vector<TriplePattern> patterns;
  std::vector<FilterExpr> filters;
  std::optional<OrderBy> order_by;
  std::optional<std::size_t> limit;
  friend bool operator==(const SelectQuery&, const SelectQuery&) = default;
};

class QueryError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kUnknownPrefix, kUnsupportedKeyword, kInvalidQuery };
  QueryError(Kind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}
  Kind kind() const { return kind_; }
  // 1-based; 0 when the error has no source position.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

std::string_view to_string(QueryError::Kind kind);

// Keywords that belong to SPARQL but not to this subset. Any of them in a
// query is an error rather than being ignored.
const std::vector<std::string_view>& unsupported_keywords();

// Prefixed names resolve through the PREFIX directives first, then through
// the vocabulary registry. `a` is rdf:type. Blank node labels in a pattern
// act as variables that cannot be projected.
SelectQuery parse_query(std::string_view text);

// Every variable of the patterns, in first-occurrence order. Names of blank
// node variables keep their "_:" prefix.
std::vector<Variable> pattern_variables(const SelectQuery& q);

struct ResultSet {
  std::vector<std::string> columns;
  std::vector<std::vector<Term>> rows;  // aligned with columns
  std::size_t type_errors = 0;  // filter evaluations that failed on operand types
  friend bool operator==(const ResultSet&, const ResultSet&) = default;
};

// Solutions are a bag unless the query says DISTINCT. Without ORDER BY rows
// are sorted by their N-Triples rendering; with it, ties fall back to the
// same order.
ResultSet evaluate(const Graph& g, const SelectQuery& q);

// Filter semantics, shared by the evaluator and usable on single values.
// Returns nullopt on a type error.
std::optional<bool> apply_filter(FilterOp op, const Term& left, const Term& right);

// Orders terms as ORDER BY does: blank nodes, then IRIs, then literals;
// numeric literals by value.
int compare_terms(const Term& a, const Term& b);

}  // namespace dmcc::query
