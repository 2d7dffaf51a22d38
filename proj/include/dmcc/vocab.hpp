#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmcc/decimal.hpp"
#include "dmcc/rdf/graph.hpp"

namespace dmcc::vocab {

enum class TermKind { kClass, kProperty, kUnknown };

std::string_view to_string(TermKind kind);

struct VocabTerm {
  std::string curie;
  std::string iri;
  TermKind kind = TermKind::kUnknown;
  std::string note;
};

struct UnitInfo {
  std::string code;
  std::string name;
  std::string dimension;  // "time" or "information"
  std::optional<Decimal> gigabytes;  // information units only
};

class VocabError : public std::runtime_error {
 public:
  enum class Kind { kMalformedCurie, kUnknownPrefix, kUnknownTerm };
  VocabError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Every vocabulary term the service model uses: namespaces, classes and
// properties, the accepted misspellings, the unit table and the currency
// list. Built once from the embedded manifest (vocab/terms.json) and shared
// read-only.
class TermRegistry {
 public:
  static const TermRegistry& instance();
  static TermRegistry from_manifest(std::string_view json);

  const rdf::PrefixMap& prefixes() const { return prefixes_; }
  const std::vector<VocabTerm>& terms() const { return terms_; }

  // Expands prefix:local. Aliases expand to their canonical IRI. In strict
  // mode the expanded term must be registered.
  std::string resolve(std::string_view curie, bool strict = false) const;
  const VocabTerm* find_curie(std::string_view curie) const;
  const VocabTerm* find_iri(std::string_view iri) const;
  TermKind kind_of(std::string_view iri) const;

  // Maps an alias IRI (e.g. the cointainsTerm spelling) to its canonical
  // IRI; other IRIs are returned unchanged.
  std::string canonical_iri(std::string_view iri) const;
  bool is_alias_iri(std::string_view iri) const { return alias_to_canonical_.count(std::string(iri)) > 0; }
  // Every IRI that means `canonical`, canonical first.
  std::vector<std::string> spellings(std::string_view canonical) const;

  // Unit lookup by UN/CEFACT code or accepted alias ("GB" -> E34).
  const UnitInfo* unit(std::string_view code) const;
  std::string canonical_unit(std::string_view code) const;
  const std::vector<UnitInfo>& units() const { return units_; }

  // "Percentaje" -> "percent"; nullopt when the text is not in the table.
  std::optional<std::string> normalize_unit_text(std::string_view text) const;

  bool is_currency(std::string_view code) const { return currencies_.count(std::string(code)) > 0; }

  // Compact form using registered prefixes when possible, else <iri>.
  std::string compact(std::string_view iri) const;

  const std::string& manifest() const { return manifest_; }

 private:
  rdf::PrefixMap prefixes_;
  std::vector<VocabTerm> terms_;
  std::map<std::string, std::size_t> by_curie_;
  std::map<std::string, std::size_t> by_iri_;
  std::map<std::string, std::string> alias_to_canonical_;  // iri -> iri
  std::vector<UnitInfo> units_;
  std::map<std::string, std::string> unit_aliases_;
  std::map<std::string, std::string> unit_text_;  // lower-cased text -> normalized
  std::set<std::string> currencies_;
  std::string manifest_;
};

// Registered term as an RDF IRI term; throws VocabError for unregistered
// curies, so typos in library code fail loudly.
rdf::Term term(std::string_view curie);

}  // namespace dmcc::vocab
