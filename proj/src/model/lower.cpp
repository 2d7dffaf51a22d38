#include <cctype>
#include <set>

#include "dmcc/model.hpp"
#include "dmcc/vocab.hpp"

namespace dmcc::model {
namespace {

using rdf::Graph;
using rdf::Literal;
using K = ModelError::Kind;

[[noreturn]] void violation(const std::string& path, const std::string& message) {
  throw ModelError(K::kInvariantViolation, path, path + ": " + message);
}

// Label material for nodes generated under `parent`.
std::string stem(const Term& parent) {
  if (parent.is_blank()) return parent.as_blank().label();
  const std::string& iri = parent.text();
  std::string tail = iri.substr(iri.find_last_of("/#:") + 1);
  std::string out;
  for (unsigned char c : tail) out += std::isalnum(c) ? static_cast<char>(c) : '_';
  return out.empty() ? "node" : out;
}

Term child(const std::optional<Term>& node, const Term& parent, const std::string& role) {
  return node ? *node : Term::blank(stem(parent) + "_" + role);
}

Term decimal_literal(Decimal d) {
  std::string s = d.to_string();
  if (s.find('.') == std::string::npos) s += ".0";
  return Term(Literal::decimal(s));
}

class Writer {
 public:
  Writer() {
    for (const auto& [prefix, ns] : vocab::TermRegistry::instance().prefixes()) g_.set_prefix(prefix, ns);
  }

  Graph take() { return std::move(g_); }

  void add(const Term& s, std::string_view curie, const Term& o) { g_.insert(s, vocab::term(curie), o); }
  void type(const Term& s, std::string_view curie) { add(s, "rdf:type", vocab::term(curie)); }
  void text(const Term& s, std::string_view curie, const std::optional<std::string>& v) {
    if (v) add(s, curie, Term::literal(*v));
  }
  void iri_or_text(const Term& s, std::string_view curie, const std::optional<std::string>& v) {
    if (!v) return;
    add(s, curie, rdf::Iri::is_valid(*v) ? Term::iri(*v) : Term::literal(*v));
  }
  void decimal(const Term& s, std::string_view curie, const std::optional<Decimal>& v) {
    if (v) add(s, curie, decimal_literal(*v));
  }

  // ---- aspects ----

  void interaction(const InteractionPoint& ip, const Term& parent, const std::string& path) {
    static const std::set<std::string> kMethods = {"GET", "POST", "PUT", "DELETE", "PATCH"};
    if (ip.http_method && !kMethods.count(*ip.http_method))
      violation(path + ".httpMethod", "'" + *ip.http_method + "' is not an HTTP method");
    const Term n = child(ip.node, parent, "interaction");
    type(n, "dmcc:Interaction");
    type(n, "s:Action");
    text(n, "rdfs:label", ip.label);
    if (ip.http_method || ip.url_template || ip.content_type) {
      const Term e = Term::blank(stem(n) + "_entry");
      add(n, "dmcc:hasEntryPoint", e);
      type(e, "s:EntryPoint");
      text(e, "s:httpMethod", ip.http_method);
      text(e, "s:urlTemplate", ip.url_template);
      text(e, "s:contentType", ip.content_type);
    }
    for (std::size_t i = 0; i < ip.parameters.size(); ++i) {
      const auto& p = ip.parameters[i];
      if (p.name.empty()) violation(path + ".parameters[" + std::to_string(i) + "].name", "empty");
      const Term pn = Term::blank(stem(n) + "_param" + std::to_string(i));
      add(n, "dmcc:hasInteractionParameter", pn);
      text(pn, "s:name", p.name);
      text(pn, "dc:description", p.description);
    }
  }

  Term interaction_node(const InteractionPoint& ip, const Term& parent) { return child(ip.node, parent, "interaction"); }

  void authentication(const Authentication& a, const Term& n, const std::string& path) {
    if (a.credential == Credential::kApiKey && a.grounding_field.empty())
      violation(path + ".credential", "an API key needs the field it is grounded in");
    type(n, "dmcc:ServiceAuthentication");
    text(n, "rdfs:label", a.label);
    text(n, "dc:description", a.description);
    if (a.requires_auth) {
      static const char* const kReq[] = {"waa:All", "waa:None", "waa:Some"};
      add(n, "waa:requiresAuthentication", vocab::term(kReq[static_cast<int>(*a.requires_auth)]));
    }
    Term holder = n;
    if (a.mechanism) {
      holder = Term::blank(stem(n) + "_mechanism");
      add(n, "waa:hasAuthenticationMechanism", holder);
      if (*a.mechanism == Mechanism::kDirect) {
        type(holder, "waa:Direct");
      } else if (*a.mechanism == Mechanism::kOAuth) {
        type(holder, "waa:OAuth");
      } else if (rdf::Iri::is_valid(a.mechanism_label)) {
        add(holder, "rdf:type", Term::iri(a.mechanism_label));
      }
    }
    if (a.credential) {
      const Term c = Term::blank(stem(n) + "_credentials");
      add(holder, "waa:hasInputCredentials", c);
      switch (*a.credential) {
        case Credential::kApiKey: type(c, "waa:APIkey"); break;
        case Credential::kUsernamePassword: type(c, "waa:UsernameAndPassword"); break;
        case Credential::kToken: type(c, "waa:Token"); break;
        case Credential::kOther:
          if (rdf::Iri::is_valid(a.credential_label)) add(c, "rdf:type", Term::iri(a.credential_label));
          break;
      }
      if (!a.grounding_field.empty()) text(c, "waa:isGroundedIn", a.grounding_field);
    }
    if (a.transmission) {
      switch (*a.transmission) {
        case Transmission::kViaUri: add(holder, "waa:wayOfSendingInformation", vocab::term("waa:ViaURI")); break;
        case Transmission::kViaHeader: add(holder, "waa:wayOfSendingInformation", vocab::term("waa:ViaHeader")); break;
        case Transmission::kOther:
          if (!rdf::Iri::is_valid(a.transmission_label))
            violation(path + ".transmission", "other transmission needs an IRI");
          add(holder, "waa:wayOfSendingInformation", Term::iri(a.transmission_label));
          break;
      }
    }
  }

  void sla(const SlaAgreement& s, const Term& n, const std::string& path) {
    type(n, "ccsla:SLA");
    text(n, "rdfs:label", s.label);
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      const auto& term = s.terms[i];
      const std::string tpath = path + ".terms[" + std::to_string(i) + "]";
      if (term.definitions.size() != term.compensations.size())
        violation(tpath, "definitions and compensations differ in number");
      const Term tn = child(term.node, n, "term" + std::to_string(i));
      add(n, "ccsla:containsTerm", tn);
      type(tn, "ccsla:Term");
      if (!term.name.empty()) text(tn, "dc:title", term.name);
      text(tn, "dc:description", term.description);
      for (std::size_t j = 0; j < term.definitions.size(); ++j) {
        const auto& iv = term.definitions[j];
        const auto& comp = term.compensations[j];
        const std::string dpath = tpath + ".definitions[" + std::to_string(j) + "]";
        if (iv.min > iv.max) violation(dpath, "min " + iv.min.to_string() + " exceeds max " + iv.max.to_string());
        if (iv.unit == "percent" && (iv.min < Decimal() || iv.max > Decimal::from_integer(100)))
          violation(dpath, "percent interval outside [0, 100]");
        if (comp.amount < Decimal()) violation(tpath + ".compensations[" + std::to_string(j) + "]", "negative amount");
        if (comp.kind == CompensationKind::kPercentOfBill && comp.amount > Decimal::from_integer(100))
          violation(tpath + ".compensations[" + std::to_string(j) + "]", "more than 100 percent");

        const std::string base = stem(tn) + "_def" + std::to_string(j);
        const Term dn = Term::blank(base);
        const Term vn = Term::blank(base + "_value");
        const Term cn = Term::blank(base + "_comp");
        add(tn, "ccsla:hasDefinition", dn);
        type(dn, "ccsla:Definition");
        add(dn, "ccsla:hasDefinitionValue", vn);
        type(vn, "s:QuantitativeValue");
        decimal(vn, "s:minValue", iv.min);
        decimal(vn, "s:maxValue", iv.max);
        if (!iv.unit.empty()) text(vn, "s:unitText", iv.unit);
        add(dn, "ccsla:hasCompensation", cn);
        type(cn, "ccsla:Compensation");
        decimal(cn, "s:value", comp.amount);
        text(cn, "s:unitText", std::string(comp.kind == CompensationKind::kPercentOfBill ? "percent" : "credits"));
      }
    }
  }

  void gigabytes(const Term& n, std::string_view curie, const std::string& role, const std::string& cls,
                 const std::optional<Decimal>& v, const std::string& path) {
    if (!v) return;
    if (*v <= Decimal()) violation(path, "must be positive");
    const Term q = Term::blank(stem(n) + "_" + role);
    add(n, curie, q);
    if (!cls.empty()) type(q, cls);
    decimal(q, "s:value", *v);
    text(q, "s:unitCode", std::string("E34"));
  }

  void instance(const Instance& inst, const Term& n, const std::string& path) {
    type(n, "ccinstances:Instance");
    text(n, "rdfs:label", inst.label);
    gigabytes(n, "ccinstances:hasRAM", "ram", "ccinstances:ram", inst.ram_gb, path + ".ramGB");
    if (inst.cpu_model || inst.cores) {
      if (inst.cores && *inst.cores <= 0) violation(path + ".cores", "must be positive");
      const Term cpu = Term::blank(stem(n) + "_cpu");
      add(n, "ccinstances:hasCPU", cpu);
      type(cpu, "ccinstances:cpu");
      text(cpu, "ccinstances:cpu_model", inst.cpu_model);
      if (inst.cores) add(cpu, "ccinstances:cores", Term(Literal::integer(*inst.cores)));
    }
    gigabytes(n, "ccinstances:hasStorage", "storage", "", inst.storage_gb, path + ".storageGB");
  }

  void plan(const PricingPlan& p, const Term& n, const std::string& path) {
    const auto& reg = vocab::TermRegistry::instance();
    if (p.min_price && p.max_price && *p.min_price > *p.max_price) violation(path, "minPrice exceeds maxPrice");
    type(n, "ccpricing:PricingPlan");
    if (!p.name.empty()) text(n, "gr:name", p.name);
    if (!p.currency.empty()) text(n, "gr:priceCurrency", p.currency);
    decimal(n, "gr:hasMinCurrencyValue", p.min_price);
    decimal(n, "gr:hasMaxCurrencyValue", p.max_price);
    for (std::size_t i = 0; i < p.compounds.size(); ++i) {
      const auto& c = p.compounds[i];
      const std::string cpath = path + ".compounds[" + std::to_string(i) + "]";
      if (!c.price_spec && !c.allowance) violation(cpath, "needs a price specification or an allowance");
      if (c.allowance && !c.price_spec) violation(cpath + ".allowance", "an allowance is carried by a price specification");
      const Term cn = child(c.node, n, "compound" + std::to_string(i));
      add(n, "ccpricing:hasCompound", cn);
      type(cn, "ccpricing:Compound");
      if (c.price_spec) {
        const auto& spec = *c.price_spec;
        if (spec.unit_price && *spec.unit_price < Decimal()) violation(cpath + ".priceSpec.unitPrice", "negative");
        if (!spec.unit.empty() && !reg.unit(spec.unit))
          violation(cpath + ".priceSpec.unit", "'" + spec.unit + "' is not in the unit table");
        const Term sn = child(spec.node, cn, "spec");
        add(cn, "ccpricing:hasPriceSpecification", sn);
        type(sn, "gr:PriceSpecification");
        decimal(sn, "gr:hasCurrencyValue", spec.unit_price);
        text(sn, "gr:priceCurrency", spec.currency);
        if (!spec.unit.empty() && (spec.unit_price || !c.allowance || c.allowance->unit != spec.unit))
          text(sn, "gr:hasUnitOfMeasurement", spec.unit);
        decimal(sn, "gr:max", spec.max_charge);
        if (c.allowance) {
          if (c.allowance->amount < Decimal()) violation(cpath + ".allowance", "negative amount");
          if (!reg.unit(c.allowance->unit))
            violation(cpath + ".allowance.unit", "'" + c.allowance->unit + "' is not in the unit table");
          const Term an = Term::blank(stem(sn) + "_allowance");
          add(sn, "gr:includesObject", an);
          type(an, "gr:TypeAndQualityNode");
          decimal(an, "gr:amountOfThisGood", c.allowance->amount);
          text(an, "gr:hasUnitOfMeasurement", c.allowance->unit);
        }
      }
      if (c.instance) {
        const Term in = child(c.instance->node, cn, "instance");
        add(cn, "ccpricing:hasInstance", in);
        instance(*c.instance, in, cpath + ".instance");
      }
      if (c.region) {
        if (c.region->code.empty()) violation(cpath + ".region.code", "empty");
        const Term rn = child(c.region->node, cn, "region");
        add(cn, "ccpricing:hasRegion", rn);
        type(rn, "ccregions:Region");
        text(rn, "ccregions:regionCode", c.region->code);
        text(rn, "s:name", c.region->display_name);
      }
    }
  }

  void function(const MLFunction& f, const Term& n, const std::string& path) {
    type(n, "ccdm:MLFunction");
    if (!f.name.empty()) text(n, "dc:title", f.name);
    text(n, "dc:description", f.description);
    std::set<std::string> titles;
    if (!f.parameters.empty() || f.parameter_set) {
      const Term set = child(f.parameter_set, n, "parameters");
      add(n, "ccdm:hasInputParameters", set);
      type(set, "ccdm:MLServiceInputParameters");
      for (std::size_t i = 0; i < f.parameters.size(); ++i) {
        const auto& p = f.parameters[i];
        const std::string ppath = path + ".parameters[" + std::to_string(i) + "]";
        if (p.title.empty()) violation(ppath + ".title", "empty");
        if (!titles.insert(p.title).second) violation(ppath + ".title", "duplicate title '" + p.title + "'");
        const Term pn = child(p.node, n, "param" + std::to_string(i));
        add(set, "ccdm:hasInputParameter", pn);
        type(pn, "ccdm:MLServiceInputParameter");
        text(pn, "dc:title", p.title);
        text(pn, "dc:description", p.description);
        text(pn, "ccdm:defaultvalue", p.default_value);
        add(pn, "ccdm:mandatory", Term(Literal::boolean(p.mandatory)));
      }
    }
    for (std::size_t i = 0; i < f.inputs.size(); ++i) {
      const auto& in = f.inputs[i];
      const Term inn = child(in.node, n, "input" + std::to_string(i));
      add(n, "mls:hasInput", inn);
      type(inn, "ccdm:MLServiceInput");
      text(inn, "dc:description", in.description);
      text(inn, "dc:format", in.format);
    }
    for (std::size_t i = 0; i < f.outputs.size(); ++i) {
      const auto& out = f.outputs[i];
      const Term on = child(out.node, n, "output" + std::to_string(i));
      add(n, "mls:hasOutput", on);
      type(on, "ccdm:MLServiceOutput");
      const bool pmml = out.kind == OutputKind::kModel && out.format == "PMML";
      switch (out.kind) {
        case OutputKind::kModel: type(on, "mls:Model"); break;
        case OutputKind::kModelEvaluation: type(on, "mls:ModelEvaluation"); break;
        case OutputKind::kData: type(on, "mls:Data"); break;
      }
      if (pmml) {
        type(on, "ccdm:PMML_Model");
      } else {
        text(on, "dc:format", out.format);
      }
      iri_or_text(on, "ccdm:storagebucket", out.storage_bucket);
      text(on, "dc:title", out.title);
      text(on, "dc:description", out.description);
    }
  }

  void service(const MLService& s, const Term& n, const std::string& path) {
    type(n, "dmcc:MLService");
    text(n, "rdfs:label", s.label);
    text(n, "dc:description", s.description);
    if (s.interaction) {
      add(n, "dmcc:hasInteractionPoint", interaction_node(*s.interaction, n));
      interaction(*s.interaction, n, path + ".interaction");
    }
    if (s.sla) {
      const Term sn = child(s.sla->node, n, "sla");
      add(n, "dmcc:hasServiceCommitment", sn);
      sla(*s.sla, sn, path + ".sla");
    }
    for (std::size_t i = 0; i < s.functions.size(); ++i) {
      const Term fn = child(s.functions[i].node, n, "function" + std::to_string(i));
      add(n, "dmcc:hasFunction", fn);
      function(s.functions[i], fn, path + ".functions[" + std::to_string(i) + "]");
    }
    if (s.authentication) {
      const Term an = child(s.authentication->node, n, "auth");
      add(n, "dmcc:hasAuthentication", an);
      authentication(*s.authentication, an, path + ".authentication");
    }
    for (std::size_t i = 0; i < s.pricing.size(); ++i) {
      const Term pn = child(s.pricing[i].node, n, "plan" + std::to_string(i));
      add(n, "dmcc:hasPricingPlan", pn);
      plan(s.pricing[i], pn, path + ".pricing[" + std::to_string(i) + "]");
    }
  }

  void provider(const ServiceProvider& p, const Term& n) {
    if (p.name.empty()) violation("name", "a provider needs a non-empty name");
    type(n, "dmcc:MLServiceProvider");
    text(n, "rdfs:label", p.label);
    text(n, "dc:description", p.description);
    text(n, "gr:name", p.name);
    if (!p.legal_name.empty()) text(n, "gr:legalName", p.legal_name);
    text(n, "gr:hasNAICS", p.naics);
    iri_or_text(n, "s:url", p.url);
    if (p.location) {
      const Term loc = Term::blank(stem(n) + "_location");
      add(n, "s:serviceLocation", loc);
      type(loc, "s:PostalAddress");
      text(loc, "s:addressCountry", p.location->country);
      text(loc, "s:addressLocality", p.location->locality);
    }
    for (std::size_t i = 0; i < p.contacts.size(); ++i) {
      const auto& c = p.contacts[i];
      const Term cn = Term::blank(stem(n) + "_contact" + std::to_string(i));
      add(n, "s:contactPoint", cn);
      type(cn, "s:ContactPoint");
      text(cn, "s:contactType", c.contact_type);
      text(cn, "s:email", c.email);
      for (std::size_t j = 0; j < c.languages.size(); ++j) {
        const Term ln = Term::blank(stem(cn) + "_lang" + std::to_string(j));
        add(cn, "s:availableLanguage", ln);
        type(ln, "s:Language");
        text(ln, "s:name", c.languages[j]);
      }
    }
    for (std::size_t i = 0; i < p.services.size(); ++i) {
      const Term sn = child(p.services[i].node, n, "service" + std::to_string(i));
      add(n, "dmcc:hasMLService", sn);
      service(p.services[i], sn, "services[" + std::to_string(i) + "]");
    }
    if (p.catalog) add(n, "dmcc:hasOfferCatalog", *p.catalog);
  }

 private:
  Graph g_;
};

}  // namespace

rdf::Graph lower(const ServiceProvider& provider) {
  Writer w;
  w.provider(provider, provider.node.value_or(Term::blank("provider")));
  return w.take();
}

rdf::Graph lower(const MLService& service) {
  Writer w;
  w.service(service, service.node.value_or(Term::blank("service")), "service");
  return w.take();
}

rdf::Graph lower(const SlaAgreement& sla) {
  Writer w;
  w.sla(sla, sla.node.value_or(Term::blank("sla")), "sla");
  return w.take();
}

rdf::Graph lower(const PricingPlan& plan) {
  Writer w;
  w.plan(plan, plan.node.value_or(Term::blank("plan")), "plan");
  return w.take();
}

}  // namespace dmcc::model
