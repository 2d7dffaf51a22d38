#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmcc/pricing.hpp"

namespace dmcc::broker {

using rdf::Graph;
using rdf::Term;

class BrokerError : public std::runtime_error {
 public:
  enum class Kind { kNoOffers, kNoneQuotable };
  BrokerError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(BrokerError::Kind kind);

// Extra names accepted for a function, keyed and valued in any case. Empty
// unless configured; "RF" -> {"RandomForest"} would let either name match.
using AliasMap = std::map<std::string, std::vector<std::string>>;

// dc:title equality after trimming and ASCII case folding, plus aliases.
class FunctionMatcher {
 public:
  explicit FunctionMatcher(std::string_view name, const AliasMap& aliases = {});
  bool matches(std::string_view title) const;

 private:
  std::vector<std::string> names_;
};

struct ProviderRef {
  Term node;
  std::string name;
  friend bool operator==(const ProviderRef&, const ProviderRef&) = default;
};

struct Offer {
  ProviderRef provider;
  Term service;
  std::string function_name;  // the dc:title as written in the data
  std::optional<model::PricingPlan> plan;  // the plan behind `quote`
  std::optional<pricing::CostBreakdown> quote;
  std::optional<std::string> error;  // why no plan of the service could be quoted
  friend bool operator==(const Offer&, const Offer&) = default;
};

// One offer per (provider, service) carrying a matching function, ordered
// by provider name, then provider node, then service node. No quotes.
std::vector<Offer> providers_offering(const Graph& g, std::string_view function_name, const AliasMap& aliases = {});

// Every offer quoted with its cheapest plan. Quoted offers come first by
// total, then provider name; offers that failed to quote follow by name.
std::vector<Offer> compare(const Graph& g, std::string_view function_name, const pricing::UsageRequest& usage,
                           const AliasMap& aliases = {});

// The first offer of compare(); throws when nothing matches or nothing quotes.
Offer best_offer(const Graph& g, std::string_view function_name, const pricing::UsageRequest& usage,
                 const AliasMap& aliases = {});

model::Json to_json(const Offer& o);

}  // namespace dmcc::broker
