#pragma once

#include "dmcc/model.hpp"
#include "json.hpp"

namespace dmcc::model {

using Json = nlohmann::ordered_json;

// Version of the JSON shape below; bumped on any incompatible change.
inline constexpr int kJsonShapeVersion = 1;

// Terms render in N-Triples form ("_:MLProvider", "<http://...>"). Decimals
// render as strings in canonical form ("99.99", "250") so no precision is
// lost; optional fields are omitted when absent.
Json node_json(const Term& t);
Json to_json(const ServiceProvider& p);
Json to_json(const MLService& s);
Json to_json(const InteractionPoint& ip);
Json to_json(const Authentication& a);
Json to_json(const SlaAgreement& sla);
Json to_json(const SlaTerm& t);
Json to_json(const Interval& iv);
Json to_json(const Compensation& c);
Json to_json(const PricingPlan& p);
Json to_json(const Compound& c);
Json to_json(const Quantity& q);
Json to_json(const Instance& i);
Json to_json(const Region& r);
Json to_json(const MLFunction& f);

std::string_view to_string(Requirement r);
std::string_view to_string(Mechanism m);
std::string_view to_string(Credential c);
std::string_view to_string(Transmission t);
std::string_view to_string(CompensationKind k);
std::string_view to_string(OutputKind k);

}  // namespace dmcc::model
