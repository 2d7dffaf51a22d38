#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dmcc/model.hpp"
#include "dmcc/model_json.hpp"

namespace dmcc::pricing {

using rdf::Term;

class PricingError : public std::runtime_error {
 public:
  enum class Kind {
    kInvalidUsage,
    kUnknownUnit,
    kNoApplicableCompound,
    kAllowanceExceeded,
    kAmbiguousScope,
    kCurrencyConflict,
    kNoQuotablePlan,
  };
  PricingError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(PricingError::Kind kind);

struct UsageRequest {
  std::vector<model::Quantity> quantities;
  std::optional<Term> instance;     // compound instance node
  std::optional<std::string> region;  // region code, e.g. "us-east-1"
};

// Sum of two requests, quantity by quantity; scoping taken from `a`.
UsageRequest merge(const UsageRequest& a, const UsageRequest& b);

struct LineItem {
  Term compound;
  std::string unit;  // "CAP" for the cap adjustment
  Decimal billed_quantity;
  Decimal unit_price;
  Decimal subtotal;
  friend bool operator==(const LineItem&, const LineItem&) = default;
};

struct CostBreakdown {
  std::vector<LineItem> items;
  std::string currency;
  Decimal total;
  std::vector<model::Quantity> allowance_applied;
  std::optional<Decimal> cap;  // the gr:max in force, if any
  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

// Compounds whose instance and region scope fit the usage and whose unit
// (own or allowance) is one of the usage units. A dimension the usage leaves
// unspecified matches any scope.
std::vector<model::Compound> applicable_compounds(const model::PricingPlan& plan, const UsageRequest& usage);

// Per unit code: matching allowances are used up first, the rest is billed
// at every matching priced compound. The lowest gr:max among the matching
// compounds caps the total through a negative CAP item. A free plan (cap 0)
// that would have to bill throws kAllowanceExceeded.
CostBreakdown quote(const model::PricingPlan& plan, const UsageRequest& usage);

struct PlanQuote {
  model::PricingPlan plan;
  CostBreakdown cost;
};

// Lowest total among the plans that can be quoted; ties go to the
// lexicographically first plan name.
PlanQuote cheapest_plan(const std::vector<model::PricingPlan>& plans, const UsageRequest& usage);

model::Json to_json(const CostBreakdown& c);
model::Json to_json(const UsageRequest& u);

}  // namespace dmcc::pricing
