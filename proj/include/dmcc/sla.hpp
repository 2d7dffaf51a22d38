#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dmcc/model.hpp"

namespace dmcc::sla {

class SlaError : public std::runtime_error {
 public:
  enum class Kind { kUnknownTerm, kUnitMismatch, kUnpairedDefinition };
  SlaError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(SlaError::Kind kind);

struct Observation {
  std::string term_name;
  Decimal value;
  std::string unit = "percent";  // unitText, normalized before comparison; "" means the term's unit
};

struct CompensationResult {
  std::optional<std::size_t> matched;  // index into the term's definitions
  std::optional<model::Compensation> compensation;
  friend bool operator==(const CompensationResult&, const CompensationResult&) = default;
};

// Ranges are half-open [min, max). A value equal to a range's max matches it
// only when no other range of the term starts there, so the top tier is
// closed and a shared endpoint belongs to the upper range.
CompensationResult compensation_for(const model::SlaAgreement& sla, const Observation& obs);

// percentOfBill: bill * amount / 100; serviceCredits: the credit amount;
// nothing matched: 0.
Decimal compensation_amount(const CompensationResult& result, Decimal billed);

}  // namespace dmcc::sla
