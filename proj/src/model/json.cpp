#include "dmcc/model_json.hpp"

namespace dmcc::model {
namespace {

template <typename T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

void put(Json& j, const char* key, const std::optional<Decimal>& v) {
  if (v) j[key] = v->to_string();
}

void put_node(Json& j, const std::optional<Term>& node) {
  if (node) j["node"] = node_json(*node);
}

template <typename T>
Json array(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& i : items) out.push_back(to_json(i));
  return out;
}

}  // namespace

std::string_view to_string(Requirement r) {
  switch (r) {
    case Requirement::kAll: return "all";
    case Requirement::kNone: return "none";
    case Requirement::kPartial: return "partial";
  }
  return "";
}

std::string_view to_string(Mechanism m) {
  switch (m) {
    case Mechanism::kDirect: return "direct";
    case Mechanism::kOAuth: return "oauth";
    case Mechanism::kOther: return "other";
  }
  return "";
}

std::string_view to_string(Credential c) {
  switch (c) {
    case Credential::kApiKey: return "apiKey";
    case Credential::kUsernamePassword: return "usernamePassword";
    case Credential::kToken: return "token";
    case Credential::kOther: return "other";
  }
  return "";
}

std::string_view to_string(Transmission t) {
  switch (t) {
    case Transmission::kViaUri: return "viaUri";
    case Transmission::kViaHeader: return "viaHeader";
    case Transmission::kOther: return "other";
  }
  return "";
}

std::string_view to_string(CompensationKind k) {
  return k == CompensationKind::kPercentOfBill ? "percentOfBill" : "serviceCredits";
}

std::string_view to_string(OutputKind k) {
  switch (k) {
    case OutputKind::kModel: return "model";
    case OutputKind::kModelEvaluation: return "modelEvaluation";
    case OutputKind::kData: return "data";
  }
  return "";
}

Json node_json(const Term& t) { return t.to_ntriples(); }

Json to_json(const InteractionPoint& ip) {
  Json j;
  put_node(j, ip.node);
  put(j, "label", ip.label);
  put(j, "httpMethod", ip.http_method);
  put(j, "urlTemplate", ip.url_template);
  put(j, "contentType", ip.content_type);
  j["parameters"] = Json::array();
  for (const auto& p : ip.parameters) {
    Json pj{{"name", p.name}};
    put(pj, "description", p.description);
    j["parameters"].push_back(pj);
  }
  return j;
}

Json to_json(const Authentication& a) {
  Json j;
  put_node(j, a.node);
  put(j, "label", a.label);
  put(j, "description", a.description);
  if (a.requires_auth) j["requires"] = to_string(*a.requires_auth);
  if (a.mechanism) {
    j["mechanism"] = to_string(*a.mechanism);
    if (*a.mechanism == Mechanism::kOther && !a.mechanism_label.empty()) j["mechanismLabel"] = a.mechanism_label;
  }
  if (a.credential) {
    j["credential"] = to_string(*a.credential);
    if (*a.credential == Credential::kOther && !a.credential_label.empty()) j["credentialLabel"] = a.credential_label;
    if (!a.grounding_field.empty()) j["groundingField"] = a.grounding_field;
  }
  if (a.transmission) {
    j["transmission"] = to_string(*a.transmission);
    if (*a.transmission == Transmission::kOther) j["transmissionLabel"] = a.transmission_label;
  }
  return j;
}

Json to_json(const Interval& iv) {
  return Json{{"min", iv.min.to_string()}, {"max", iv.max.to_string()}, {"unit", iv.unit}};
}

Json to_json(const Compensation& c) { return Json{{"kind", to_string(c.kind)}, {"amount", c.amount.to_string()}}; }

Json to_json(const SlaTerm& t) {
  Json j;
  put_node(j, t.node);
  j["name"] = t.name;
  put(j, "description", t.description);
  j["definitions"] = array(t.definitions);
  j["compensations"] = array(t.compensations);
  return j;
}

Json to_json(const SlaAgreement& sla) {
  Json j;
  put_node(j, sla.node);
  put(j, "label", sla.label);
  j["terms"] = array(sla.terms);
  return j;
}

Json to_json(const Quantity& q) { return Json{{"amount", q.amount.to_string()}, {"unit", q.unit}}; }

Json to_json(const Instance& i) {
  Json j;
  put_node(j, i.node);
  put(j, "label", i.label);
  put(j, "ramGB", i.ram_gb);
  put(j, "cpuModel", i.cpu_model);
  put(j, "cores", i.cores);
  put(j, "storageGB", i.storage_gb);
  return j;
}

Json to_json(const Region& r) {
  Json j;
  put_node(j, r.node);
  j["code"] = r.code;
  put(j, "displayName", r.display_name);
  return j;
}

Json to_json(const Compound& c) {
  Json j;
  put_node(j, c.node);
  if (c.price_spec) {
    const auto& s = *c.price_spec;
    Json sj;
    put_node(sj, s.node);
    put(sj, "unitPrice", s.unit_price);
    put(sj, "currency", s.currency);
    sj["unit"] = s.unit;
    put(sj, "maxCharge", s.max_charge);
    j["priceSpec"] = sj;
  }
  if (c.instance) j["instance"] = to_json(*c.instance);
  if (c.region) j["region"] = to_json(*c.region);
  if (c.allowance) j["allowance"] = to_json(*c.allowance);
  return j;
}

Json to_json(const PricingPlan& p) {
  Json j;
  put_node(j, p.node);
  j["name"] = p.name;
  put(j, "minPrice", p.min_price);
  put(j, "maxPrice", p.max_price);
  j["currency"] = p.currency;
  j["compounds"] = array(p.compounds);
  return j;
}

Json to_json(const MLFunction& f) {
  Json j;
  put_node(j, f.node);
  j["name"] = f.name;
  put(j, "description", f.description);
  j["parameters"] = Json::array();
  for (const auto& p : f.parameters) {
    Json pj;
    put_node(pj, p.node);
    pj["title"] = p.title;
    put(pj, "description", p.description);
    put(pj, "defaultValue", p.default_value);
    pj["mandatory"] = p.mandatory;
    j["parameters"].push_back(pj);
  }
  j["inputs"] = Json::array();
  for (const auto& in : f.inputs) {
    Json ij;
    put_node(ij, in.node);
    put(ij, "description", in.description);
    put(ij, "format", in.format);
    j["inputs"].push_back(ij);
  }
  j["outputs"] = Json::array();
  for (const auto& out : f.outputs) {
    Json oj;
    put_node(oj, out.node);
    oj["kind"] = to_string(out.kind);
    put(oj, "format", out.format);
    put(oj, "storageBucket", out.storage_bucket);
    put(oj, "title", out.title);
    put(oj, "description", out.description);
    j["outputs"].push_back(oj);
  }
  return j;
}

Json to_json(const MLService& s) {
  Json j;
  put_node(j, s.node);
  put(j, "label", s.label);
  put(j, "description", s.description);
  if (s.interaction) j["interaction"] = to_json(*s.interaction);
  if (s.sla) j["sla"] = to_json(*s.sla);
  j["functions"] = array(s.functions);
  if (s.authentication) j["authentication"] = to_json(*s.authentication);
  j["pricing"] = array(s.pricing);
  return j;
}

Json to_json(const ServiceProvider& p) {
  Json j;
  put_node(j, p.node);
  put(j, "label", p.label);
  put(j, "description", p.description);
  j["name"] = p.name;
  j["legalName"] = p.legal_name;
  put(j, "naics", p.naics);
  put(j, "url", p.url);
  if (p.location) {
    Json lj = Json::object();
    put(lj, "country", p.location->country);
    put(lj, "locality", p.location->locality);
    j["location"] = lj;
  }
  j["contacts"] = Json::array();
  for (const auto& c : p.contacts) {
    Json cj;
    put(cj, "contactType", c.contact_type);
    cj["languages"] = c.languages;
    put(cj, "email", c.email);
    j["contacts"].push_back(cj);
  }
  j["services"] = array(p.services);
  if (p.catalog) j["catalogRef"] = node_json(*p.catalog);
  return j;
}

}  // namespace dmcc::model
