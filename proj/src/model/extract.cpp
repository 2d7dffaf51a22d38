#include <algorithm>
#include <charconv>
#include <map>

#include "dmcc/model.hpp"
#include "dmcc/vocab.hpp"

namespace dmcc::model {

ModelError::ModelError(Kind kind, std::string where, const std::string& message)
    : std::runtime_error(message), kind_(kind), where_(std::move(where)) {}

std::string_view to_string(ModelError::Kind kind) {
  using K = ModelError::Kind;
  switch (kind) {
    case K::kNotAProvider: return "not-a-provider";
    case K::kNotAService: return "not-a-service";
    case K::kMissingField: return "missing-field";
    case K::kMalformedLiteral: return "malformed-literal";
    case K::kMalformedBoolean: return "malformed-boolean";
    case K::kMalformedInterval: return "malformed-interval";
    case K::kUnexpectedValue: return "unexpected-value";
    case K::kUnknownUnit: return "unknown-unit";
    case K::kDanglingReference: return "dangling-reference";
    case K::kInvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

const SlaTerm* SlaAgreement::find_term(std::string_view name) const {
  for (const auto& t : terms)
    if (t.name == name) return &t;
  return nullptr;
}

namespace {

using rdf::Graph;
using K = ModelError::Kind;

class Reader {
 public:
  Reader(const Graph& g, std::vector<Issue>* issues)
      : g_(g), reg_(vocab::TermRegistry::instance()), issues_(issues) {}

  const Graph& graph() const { return g_; }

  void fail(K kind, const Term& node, const std::string& where, const std::string& message) const {
    if (!issues_) throw ModelError(kind, where, node.to_ntriples() + ": " + message);
    issues_->push_back(Issue{Issue::Kind::kError, kind, node, where, message});
  }

  void note_positional(const Term& node) const {
    if (issues_)
      issues_->push_back(Issue{Issue::Kind::kPositionalPairing, K::kMissingField, node, "ccsla:hasCompensation",
                               "compensations paired with definitions by node order"});
  }

  // Objects under every accepted spelling of the predicate, in term order.
  std::vector<Term> objects(const Term& s, std::string_view curie) const {
    std::vector<Term> out;
    for (const auto& iri : reg_.spellings(reg_.resolve(curie, true))) {
      auto objs = g_.objects(s, Term::iri(iri));
      out.insert(out.end(), objs.begin(), objs.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::optional<Term> first(const Term& s, std::string_view curie) const {
    auto objs = objects(s, curie);
    if (objs.empty()) return std::nullopt;
    return objs.front();
  }

  // Lexical form of a literal or the value of an IRI; first in term order.
  std::optional<std::string> text(const Term& s, std::string_view curie) const {
    for (const auto& o : objects(s, curie))
      if (!o.is_blank()) return o.text();
    return std::nullopt;
  }

  std::optional<Decimal> decimal(const Term& s, std::string_view curie) const {
    auto t = text(s, curie);
    if (!t) return std::nullopt;
    auto d = Decimal::parse(*t);
    if (!d) fail(K::kMalformedLiteral, s, std::string(curie), "not a decimal: '" + *t + "'");
    return d;
  }

  std::optional<std::int64_t> integer(const Term& s, std::string_view curie) const {
    auto t = text(s, curie);
    if (!t) return std::nullopt;
    std::int64_t v = 0;
    const char* begin = t->data() + (t->size() > 0 && (*t)[0] == '+' ? 1 : 0);
    const char* end = t->data() + t->size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || begin == end) {
      fail(K::kMalformedLiteral, s, std::string(curie), "not an integer: '" + *t + "'");
      return std::nullopt;
    }
    return v;
  }

  bool has_type(const Term& s, std::string_view curie) const {
    return g_.contains(rdf::Triple(s, Term::iri(std::string(rdf::kRdfType)), vocab::term(curie)));
  }

  std::vector<std::string> types(const Term& s) const {
    std::vector<std::string> out;
    for (const auto& o : g_.objects(s, Term::iri(std::string(rdf::kRdfType))))
      if (o.is_iri()) out.push_back(o.as_iri().value());
    return out;
  }

  // Link targets that can be described: literals and targets without any
  // triples are reported; `dangling` selects the error for the latter.
  std::vector<Term> links(const Term& s, std::string_view curie, bool dangling) const {
    std::vector<Term> out;
    for (const auto& o : objects(s, curie)) {
      if (o.is_literal()) {
        fail(K::kUnexpectedValue, s, std::string(curie), "link target is a literal");
      } else if (dangling && !g_.has_subject(o)) {
        fail(K::kDanglingReference, s, std::string(curie), "target " + o.to_ntriples() + " is not described");
      } else {
        out.push_back(o);
      }
    }
    return out;
  }

  std::string iri(std::string_view curie) const { return reg_.resolve(curie, true); }
  const vocab::TermRegistry& registry() const { return reg_; }

 private:
  const Graph& g_;
  const vocab::TermRegistry& reg_;
  std::vector<Issue>* issues_;
};

// ---- Interaction -----------------------------------------------------------

InteractionPoint read_interaction(const Reader& r, const Term& node) {
  InteractionPoint ip;
  ip.node = node;
  ip.label = r.text(node, "rdfs:label");
  const Term entry = r.first(node, "dmcc:hasEntryPoint").value_or(node);
  ip.http_method = r.text(entry, "s:httpMethod");
  ip.url_template = r.text(entry, "s:urlTemplate");
  ip.content_type = r.text(entry, "s:contentType");
  for (const auto& p : r.links(node, "dmcc:hasInteractionParameter", false)) {
    auto name = r.text(p, "s:name");
    if (!name) {
      r.fail(K::kMissingField, p, "s:name", "interaction parameter without a name");
      continue;
    }
    ip.parameters.push_back({*name, r.text(p, "dc:description")});
  }
  std::sort(ip.parameters.begin(), ip.parameters.end(),
            [](const auto& a, const auto& b) { return std::tie(a.name, a.description) < std::tie(b.name, b.description); });
  return ip;
}

// ---- Authentication --------------------------------------------------------

Authentication read_authentication(const Reader& r, const Term& node) {
  Authentication a;
  a.node = node;
  a.label = r.text(node, "rdfs:label");
  a.description = r.text(node, "dc:description");

  if (auto req = r.first(node, "waa:requiresAuthentication")) {
    const std::string v = req->is_iri() ? req->as_iri().value() : "";
    if (v == r.iri("waa:All")) {
      a.requires_auth = Requirement::kAll;
    } else if (v == r.iri("waa:None")) {
      a.requires_auth = Requirement::kNone;
    } else if (v == r.iri("waa:Some")) {
      a.requires_auth = Requirement::kPartial;
    } else {
      r.fail(K::kUnexpectedValue, node, "waa:requiresAuthentication", "expected waa:All, waa:Some or waa:None");
    }
  }

  const auto mech = r.first(node, "waa:hasAuthenticationMechanism");
  if (mech && !mech->is_literal()) {
    a.mechanism = Mechanism::kOther;
    const auto types = r.types(*mech);
    if (std::find(types.begin(), types.end(), r.iri("waa:Direct")) != types.end()) {
      a.mechanism = Mechanism::kDirect;
    } else if (std::find(types.begin(), types.end(), r.iri("waa:OAuth")) != types.end()) {
      a.mechanism = Mechanism::kOAuth;
    } else if (!types.empty()) {
      a.mechanism_label = types.front();
    }
  }

  // Credentials and transmission hang off the mechanism in the usual shape,
  // but are accepted on the authentication node itself as well.
  const Term holder = (mech && !mech->is_literal()) ? *mech : node;
  auto cred = r.first(holder, "waa:hasInputCredentials");
  if (!cred && holder != node) cred = r.first(node, "waa:hasInputCredentials");
  if (cred && !cred->is_literal()) {
    const auto types = r.types(*cred);
    auto typed = [&](std::string_view curie) {
      return std::find(types.begin(), types.end(), r.iri(curie)) != types.end();
    };
    if (typed("waa:APIkey")) {
      a.credential = Credential::kApiKey;
    } else if (typed("waa:UsernameAndPassword")) {
      a.credential = Credential::kUsernamePassword;
    } else if (typed("waa:Token")) {
      a.credential = Credential::kToken;
    } else {
      a.credential = Credential::kOther;
      if (!types.empty()) a.credential_label = types.front();
    }
    a.grounding_field = r.text(*cred, "waa:isGroundedIn").value_or("");
  }

  auto way = r.first(holder, "waa:wayOfSendingInformation");
  if (!way && holder != node) way = r.first(node, "waa:wayOfSendingInformation");
  if (way) {
    const std::string v = way->is_iri() ? way->as_iri().value() : "";
    if (v == r.iri("waa:ViaURI")) {
      a.transmission = Transmission::kViaUri;
    } else if (v == r.iri("waa:ViaHeader")) {
      a.transmission = Transmission::kViaHeader;
    } else {
      a.transmission = Transmission::kOther;
      a.transmission_label = v;
    }
  }
  return a;
}

// ---- SLA -------------------------------------------------------------------

std::optional<Interval> read_interval(const Reader& r, const Term& definition) {
  auto value = r.first(definition, "ccsla:hasDefinitionValue");
  if (!value || value->is_literal()) {
    r.fail(K::kMalformedInterval, definition, "ccsla:hasDefinitionValue", "definition has no value node");
    return std::nullopt;
  }
  // A structured value may wrap the QuantitativeValue under s:value.
  Term qv = *value;
  for (int depth = 0; depth < 4; ++depth) {
    if (r.first(qv, "s:minValue") || r.first(qv, "s:maxValue")) break;
    auto inner = r.first(qv, "s:value");
    if (!inner || inner->is_literal()) break;
    qv = *inner;
  }
  auto min = r.decimal(qv, "s:minValue");
  auto max = r.decimal(qv, "s:maxValue");
  if (!r.text(qv, "s:minValue")) r.fail(K::kMalformedInterval, definition, "s:minValue", "interval without minValue");
  if (!r.text(qv, "s:maxValue")) r.fail(K::kMalformedInterval, definition, "s:maxValue", "interval without maxValue");
  if (!min || !max) return std::nullopt;
  Interval iv{*min, *max, ""};
  if (auto unit = r.text(qv, "s:unitText")) iv.unit = r.registry().normalize_unit_text(*unit).value_or(*unit);
  return iv;
}

std::optional<Compensation> read_compensation(const Reader& r, const Term& node) {
  auto amount = r.decimal(node, "s:value");
  if (!r.text(node, "s:value")) r.fail(K::kMissingField, node, "s:value", "compensation without an amount");
  const auto unit = r.text(node, "s:unitText");
  const auto normalized = unit ? r.registry().normalize_unit_text(*unit) : std::nullopt;
  std::optional<CompensationKind> kind;
  if (normalized == "percent") {
    kind = CompensationKind::kPercentOfBill;
  } else if (normalized == "credits") {
    kind = CompensationKind::kServiceCredits;
  } else if (!unit) {
    r.fail(K::kMissingField, node, "s:unitText", "compensation without a unit");
  } else {
    r.fail(K::kUnexpectedValue, node, "s:unitText", "compensation unit must be percent or credits");
  }
  if (!amount || !kind) return std::nullopt;
  return Compensation{*kind, *amount};
}

SlaTerm read_sla_term(const Reader& r, const Term& node) {
  SlaTerm term;
  term.node = node;
  term.name = r.text(node, "dc:title").value_or(r.text(node, "rdfs:label").value_or(""));
  term.description = r.text(node, "dc:description");

  struct Pair {
    Interval interval;
    std::optional<Compensation> comp;
  };
  std::vector<Pair> pairs;
  std::vector<std::size_t> unlinked;  // indices into pairs, definition node order
  for (const auto& def : r.links(node, "ccsla:hasDefinition", false)) {
    auto iv = read_interval(r, def);
    auto link = r.first(def, "ccsla:hasCompensation");
    if (!iv) continue;
    if (link && !link->is_literal()) {
      pairs.push_back({*iv, read_compensation(r, *link)});
    } else {
      unlinked.push_back(pairs.size());
      pairs.push_back({*iv, std::nullopt});
    }
  }

  std::vector<Compensation> loose;
  for (const auto& c : r.links(node, "ccsla:hasCompensation", false))
    if (auto comp = read_compensation(r, c)) loose.push_back(*comp);
  if (!unlinked.empty() && !loose.empty()) r.note_positional(node);
  for (std::size_t i = 0; i < unlinked.size() && i < loose.size(); ++i) pairs[unlinked[i]].comp = loose[i];

  auto key = [](const Pair& p) { return std::tie(p.interval.min, p.interval.max, p.interval.unit); };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
    if (a.comp.has_value() != b.comp.has_value()) return a.comp.has_value();
    return key(a) < key(b);
  });
  for (const auto& p : pairs) {
    term.definitions.push_back(p.interval);
    if (p.comp) term.compensations.push_back(*p.comp);
  }
  for (std::size_t i = unlinked.size(); i < loose.size(); ++i) term.compensations.push_back(loose[i]);
  return term;
}

SlaAgreement read_sla(const Reader& r, const Term& node) {
  SlaAgreement sla;
  sla.node = node;
  sla.label = r.text(node, "rdfs:label");
  for (const auto& t : r.links(node, "ccsla:containsTerm", false)) sla.terms.push_back(read_sla_term(r, t));
  return sla;
}

// ---- Pricing ---------------------------------------------------------------

std::optional<std::string> checked_unit(const Reader& r, const Term& node, std::string_view curie) {
  auto unit = r.text(node, curie);
  if (unit && !r.registry().unit(*unit))
    r.fail(K::kUnknownUnit, node, std::string(curie), "unit code '" + *unit + "' is not in the unit table");
  return unit;
}

// s:value + s:unitCode on an information quantity, in gigabytes.
std::optional<Decimal> read_gigabytes(const Reader& r, const Term& node) {
  auto value = r.decimal(node, "s:value");
  if (!value) return std::nullopt;
  const std::string code = r.text(node, "s:unitCode").value_or("E34");
  const auto* unit = r.registry().unit(code);
  if (!unit) {
    r.fail(K::kUnknownUnit, node, "s:unitCode", "unit code '" + code + "' is not in the unit table");
    return std::nullopt;
  }
  if (!unit->gigabytes) {
    r.fail(K::kUnexpectedValue, node, "s:unitCode", "'" + code + "' is not an information unit");
    return std::nullopt;
  }
  return *value * *unit->gigabytes;
}

Instance read_instance(const Reader& r, const Term& node) {
  Instance inst;
  inst.node = node;
  inst.label = r.text(node, "rdfs:label");
  if (auto ram = r.first(node, "ccinstances:hasRAM"); ram && !ram->is_literal()) inst.ram_gb = read_gigabytes(r, *ram);
  if (auto cpu = r.first(node, "ccinstances:hasCPU"); cpu && !cpu->is_literal()) {
    inst.cpu_model = r.text(*cpu, "ccinstances:cpu_model");
    inst.cores = r.integer(*cpu, "ccinstances:cores");
  }
  if (auto st = r.first(node, "ccinstances:hasStorage"); st && !st->is_literal())
    inst.storage_gb = read_gigabytes(r, *st);
  return inst;
}

Region read_region(const Reader& r, const Term& node) {
  Region region;
  region.node = node;
  auto code = r.text(node, "ccregions:regionCode");
  if (!code) r.fail(K::kMissingField, node, "ccregions:regionCode", "region without a code");
  region.code = code.value_or("");
  region.display_name = r.text(node, "s:name");
  return region;
}

Compound read_compound(const Reader& r, const Term& node) {
  Compound c;
  c.node = node;
  if (auto spec_node = r.first(node, "ccpricing:hasPriceSpecification"); spec_node && !spec_node->is_literal()) {
    PriceSpec spec;
    spec.node = *spec_node;
    spec.unit_price = r.decimal(*spec_node, "gr:hasCurrencyValue");
    spec.currency = r.text(*spec_node, "gr:priceCurrency");
    spec.max_charge = r.decimal(*spec_node, "gr:max");
    auto unit = checked_unit(r, *spec_node, "gr:hasUnitOfMeasurement");
    if (auto inc = r.first(*spec_node, "gr:includesObject"); inc && !inc->is_literal()) {
      auto amount = r.decimal(*inc, "gr:amountOfThisGood");
      auto inc_unit = checked_unit(r, *inc, "gr:hasUnitOfMeasurement");
      if (!r.text(*inc, "gr:amountOfThisGood"))
        r.fail(K::kMissingField, *inc, "gr:amountOfThisGood", "included object without an amount");
      if (!inc_unit) r.fail(K::kMissingField, *inc, "gr:hasUnitOfMeasurement", "included object without a unit");
      if (amount && inc_unit) c.allowance = Quantity{*amount, *inc_unit};
    }
    spec.unit = unit.value_or(c.allowance ? c.allowance->unit : "");
    c.price_spec = spec;
  }
  if (auto inst = r.first(node, "ccpricing:hasInstance"); inst && !inst->is_literal())
    c.instance = read_instance(r, *inst);
  if (auto reg = r.first(node, "ccpricing:hasRegion"); reg && !reg->is_literal()) c.region = read_region(r, *reg);
  return c;
}

PricingPlan read_pricing(const Reader& r, const Term& node) {
  PricingPlan plan;
  plan.node = node;
  plan.name = r.text(node, "gr:name").value_or("");
  plan.currency = r.text(node, "gr:priceCurrency").value_or("");
  plan.min_price = r.decimal(node, "gr:hasMinCurrencyValue");
  plan.max_price = r.decimal(node, "gr:hasMaxCurrencyValue");
  for (const auto& c : r.links(node, "ccpricing:hasCompound", false)) plan.compounds.push_back(read_compound(r, c));
  return plan;
}

// ---- Function --------------------------------------------------------------

std::optional<Parameter> read_parameter(const Reader& r, const Term& node) {
  Parameter p;
  p.node = node;
  auto title = r.text(node, "dc:title");
  if (!title) {
    r.fail(K::kMissingField, node, "dc:title", "parameter without a title");
    return std::nullopt;
  }
  p.title = *title;
  p.description = r.text(node, "dc:description");
  p.default_value = r.text(node, "ccdm:defaultvalue");
  if (auto m = r.text(node, "ccdm:mandatory")) {
    if (*m == "true") {
      p.mandatory = true;
    } else if (*m == "false") {
      p.mandatory = false;
    } else {
      r.fail(K::kMalformedBoolean, node, "ccdm:mandatory", "expected true or false, got '" + *m + "'");
    }
  }
  return p;
}

OutputSpec read_output(const Reader& r, const Term& node) {
  OutputSpec out;
  out.node = node;
  const auto types = r.types(node);
  auto typed = [&](std::string_view curie) {
    return std::find(types.begin(), types.end(), r.iri(curie)) != types.end();
  };
  const bool pmml = typed("ccdm:PMML_Model");
  if (pmml || typed("mls:Model")) {
    out.kind = OutputKind::kModel;
  } else if (typed("mls:ModelEvaluation")) {
    out.kind = OutputKind::kModelEvaluation;
  } else {
    out.kind = OutputKind::kData;
  }
  out.format = pmml ? std::optional<std::string>("PMML") : r.text(node, "dc:format");
  out.storage_bucket = r.text(node, "ccdm:storagebucket");
  out.title = r.text(node, "dc:title");
  out.description = r.text(node, "dc:description");
  return out;
}

MLFunction read_function(const Reader& r, const Term& node) {
  MLFunction f;
  f.node = node;
  f.name = r.text(node, "dc:title").value_or(r.text(node, "rdfs:label").value_or(""));
  f.description = r.text(node, "dc:description");
  for (const auto& set : r.links(node, "ccdm:hasInputParameters", false)) {
    if (!f.parameter_set) f.parameter_set = set;
    for (const auto& p : r.links(set, "ccdm:hasInputParameter", false))
      if (auto param = read_parameter(r, p)) f.parameters.push_back(*param);
  }
  std::stable_sort(f.parameters.begin(), f.parameters.end(),
                   [](const Parameter& a, const Parameter& b) { return a.title < b.title; });
  for (const auto& in : r.links(node, "mls:hasInput", false))
    f.inputs.push_back({in, r.text(in, "dc:description"), r.text(in, "dc:format")});
  for (const auto& out : r.links(node, "mls:hasOutput", false)) f.outputs.push_back(read_output(r, out));
  return f;
}

// ---- Service and provider --------------------------------------------------

MLService read_service(const Reader& r, const Term& node) {
  MLService svc;
  svc.node = node;
  svc.label = r.text(node, "rdfs:label");
  svc.description = r.text(node, "dc:description");
  if (auto t = r.links(node, "dmcc:hasInteractionPoint", true); !t.empty())
    svc.interaction = read_interaction(r, t.front());
  if (auto t = r.links(node, "dmcc:hasServiceCommitment", true); !t.empty()) svc.sla = read_sla(r, t.front());
  for (const auto& f : r.links(node, "dmcc:hasFunction", true)) svc.functions.push_back(read_function(r, f));
  if (auto t = r.links(node, "dmcc:hasAuthentication", true); !t.empty())
    svc.authentication = read_authentication(r, t.front());
  for (const auto& p : r.links(node, "dmcc:hasPricingPlan", true)) svc.pricing.push_back(read_pricing(r, p));
  return svc;
}

ServiceProvider read_provider(const Reader& r, const Term& node) {
  ServiceProvider p;
  p.node = node;
  p.label = r.text(node, "rdfs:label");
  p.description = r.text(node, "dc:description");
  auto name = r.text(node, "gr:name");
  if (!name || name->empty()) r.fail(K::kMissingField, node, "gr:name", "provider without a name");
  p.name = name.value_or("");
  p.legal_name = r.text(node, "gr:legalName").value_or("");
  p.naics = r.text(node, "gr:hasNAICS");
  p.url = r.text(node, "s:url");
  if (auto loc = r.first(node, "s:serviceLocation"); loc && !loc->is_literal())
    p.location = PostalAddress{r.text(*loc, "s:addressCountry"), r.text(*loc, "s:addressLocality")};
  for (const auto& c : r.links(node, "s:contactPoint", false)) {
    ContactPoint cp;
    cp.contact_type = r.text(c, "s:contactType");
    cp.email = r.text(c, "s:email");
    for (const auto& lang : r.objects(c, "s:availableLanguage")) {
      auto name = lang.is_literal() ? std::optional<std::string>(lang.text()) : r.text(lang, "s:name");
      if (name) cp.languages.push_back(*name);
    }
    std::sort(cp.languages.begin(), cp.languages.end());
    p.contacts.push_back(std::move(cp));
  }
  for (const auto& s : r.links(node, "dmcc:hasMLService", true)) p.services.push_back(read_service(r, s));
  p.catalog = r.first(node, "dmcc:hasOfferCatalog");
  return p;
}

std::vector<Term> typed_subjects(const rdf::Graph& g, std::string_view curie) {
  return g.subjects(Term::iri(std::string(rdf::kRdfType)), vocab::term(curie));
}

}  // namespace

std::vector<Term> list_providers(const rdf::Graph& g) { return typed_subjects(g, "dmcc:MLServiceProvider"); }
std::vector<Term> list_services(const rdf::Graph& g) { return typed_subjects(g, "dmcc:MLService"); }

ServiceProvider extract_provider(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues) {
  Reader r(g, issues);
  if (!r.has_type(node, "dmcc:MLServiceProvider"))
    throw ModelError(K::kNotAProvider, "rdf:type", node.to_ntriples() + " is not typed dmcc:MLServiceProvider");
  return read_provider(r, node);
}

MLService extract_service(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues) {
  Reader r(g, issues);
  if (!r.has_type(node, "dmcc:MLService"))
    throw ModelError(K::kNotAService, "rdf:type", node.to_ntriples() + " is not typed dmcc:MLService");
  return read_service(r, node);
}

SlaAgreement extract_sla(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues) {
  return read_sla(Reader(g, issues), node);
}

PricingPlan extract_pricing(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues) {
  return read_pricing(Reader(g, issues), node);
}

MLFunction extract_function(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues) {
  return read_function(Reader(g, issues), node);
}

Authentication extract_authentication(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues) {
  return read_authentication(Reader(g, issues), node);
}

InteractionPoint extract_interaction(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues) {
  return read_interaction(Reader(g, issues), node);
}

}  // namespace dmcc::model
