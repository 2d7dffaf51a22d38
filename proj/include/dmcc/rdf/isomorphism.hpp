#pragma once

#include <map>
#include <optional>

#include "dmcc/rdf/graph.hpp"

namespace dmcc::rdf {

using BlankMapping = std::map<Term, Term>;

// Searches for a bijection between the blank nodes of `a` and `b` under which
// the triple sets coincide. Candidates are narrowed by iterated neighbourhood
// hashing before a backtracking search; intended for desk-scale graphs.
std::optional<BlankMapping> find_isomorphism(const Graph& a, const Graph& b);

inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace dmcc::rdf
