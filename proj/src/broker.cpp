#include "dmcc/broker.hpp"

#include <algorithm>
#include <cctype>

namespace dmcc::broker {
namespace {

std::string fold(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(first, last - first + 1));
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool by_provider(const Offer& a, const Offer& b) {
  if (a.provider.name != b.provider.name) return a.provider.name < b.provider.name;
  if (a.provider.node != b.provider.node) return a.provider.node.to_ntriples() < b.provider.node.to_ntriples();
  return a.service.to_ntriples() < b.service.to_ntriples();
}

struct Found {
  Offer offer;
  std::vector<model::PricingPlan> plans;
};

std::vector<Found> find(const Graph& g, std::string_view function_name, const AliasMap& aliases) {
  const FunctionMatcher match(function_name, aliases);
  std::vector<Found> out;
  for (const auto& node : model::list_providers(g)) {
    std::vector<model::Issue> issues;
    const auto provider = model::extract_provider(g, node, &issues);
    for (const auto& service : provider.services) {
      if (!service.node) continue;
      const auto fn = std::find_if(service.functions.begin(), service.functions.end(),
                                   [&](const model::MLFunction& f) { return match.matches(f.name); });
      if (fn == service.functions.end()) continue;
      out.push_back(Found{Offer{ProviderRef{node, provider.name}, *service.node, fn->name, {}, {}, {}}, service.pricing});
    }
  }
  std::sort(out.begin(), out.end(), [](const Found& a, const Found& b) { return by_provider(a.offer, b.offer); });
  return out;
}

}  // namespace

std::string_view to_string(BrokerError::Kind kind) {
  return kind == BrokerError::Kind::kNoOffers ? "no-offers" : "none-quotable";
}

FunctionMatcher::FunctionMatcher(std::string_view name, const AliasMap& aliases) {
  names_.push_back(fold(name));
  for (const auto& [key, values] : aliases) {
    std::vector<std::string> group{fold(key)};
    for (const auto& v : values) group.push_back(fold(v));
    if (std::find(group.begin(), group.end(), names_.front()) == group.end()) continue;
    for (auto& n : group)
      if (std::find(names_.begin(), names_.end(), n) == names_.end()) names_.push_back(std::move(n));
  }
}

bool FunctionMatcher::matches(std::string_view title) const {
  return std::find(names_.begin(), names_.end(), fold(title)) != names_.end();
}

std::vector<Offer> providers_offering(const Graph& g, std::string_view function_name, const AliasMap& aliases) {
  std::vector<Offer> out;
  for (auto& f : find(g, function_name, aliases)) out.push_back(std::move(f.offer));
  return out;
}

std::vector<Offer> compare(const Graph& g, std::string_view function_name, const pricing::UsageRequest& usage,
                           const AliasMap& aliases) {
  std::vector<Offer> out;
  for (auto& f : find(g, function_name, aliases)) {
    try {
      auto best = pricing::cheapest_plan(f.plans, usage);
      f.offer.plan = std::move(best.plan);
      f.offer.quote = std::move(best.cost);
    } catch (const pricing::PricingError& e) {
      f.offer.error = std::string(pricing::to_string(e.kind())) + ": " + e.what();
    }
    out.push_back(std::move(f.offer));
  }
  std::stable_sort(out.begin(), out.end(), [](const Offer& a, const Offer& b) {
    if (a.quote.has_value() != b.quote.has_value()) return a.quote.has_value();
    if (a.quote && a.quote->total != b.quote->total) return a.quote->total < b.quote->total;
    return by_provider(a, b);
  });
  return out;
}

Offer best_offer(const Graph& g, std::string_view function_name, const pricing::UsageRequest& usage,
                 const AliasMap& aliases) {
  auto offers = compare(g, function_name, usage, aliases);
  if (offers.empty())
    throw BrokerError(BrokerError::Kind::kNoOffers, "no provider offers '" + std::string(function_name) + "'");
  if (!offers.front().quote)
    throw BrokerError(BrokerError::Kind::kNoneQuotable,
                      "no offer of '" + std::string(function_name) + "' can be quoted for this usage");
  return std::move(offers.front());
}

model::Json to_json(const Offer& o) {
  model::Json j;
  j["provider"] = model::Json{{"node", model::node_json(o.provider.node)}, {"name", o.provider.name}};
  j["service"] = model::node_json(o.service);
  j["function"] = o.function_name;
  if (o.plan) {
    model::Json pj;
    if (o.plan->node) pj["node"] = model::node_json(*o.plan->node);
    pj["name"] = o.plan->name;
    j["plan"] = pj;
  }
  if (o.quote) j["quote"] = pricing::to_json(*o.quote);
  if (o.error) j["error"] = *o.error;
  return j;
}

}  // namespace dmcc::broker
