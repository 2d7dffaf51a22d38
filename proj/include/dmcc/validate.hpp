#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dmcc/model_json.hpp"
#include "dmcc/rdf/graph.hpp"

namespace dmcc::validate {

using rdf::Term;

enum class Severity { kError, kWarning };

std::string_view to_string(Severity s);

struct Rule {
  std::string_view code;
  Severity severity;
  std::string_view meaning;
};

// Every code a diagnostic can carry.
const std::vector<Rule>& rules();
const Rule* find_rule(std::string_view code);

struct Diagnostic {
  Severity severity;
  std::string code;
  Term node;
  std::string message;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct Report {
  // Sorted by node, then code, then message; no duplicates.
  std::vector<Diagnostic> diagnostics;

  std::size_t errors() const;
  std::size_t warnings() const;
  bool conformant() const { return diagnostics.empty(); }
  std::vector<const Diagnostic*> with_code(std::string_view code) const;
};

Report validate(const rdf::Graph& g);
// validate plus UNKNOWN_TERM warnings for predicates and classes the
// vocabulary registry does not know.
Report validate_strict(const rdf::Graph& g);

model::Json to_json(const Report& r);
// One line per diagnostic: "error ASPECT_MISSING_AUTH _:svc: message".
std::string to_text(const Report& r);

}  // namespace dmcc::validate
