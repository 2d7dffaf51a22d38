#include "dmcc/validate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dmcc/model.hpp"
#include "dmcc/vocab.hpp"

namespace dmcc::validate {

std::string_view to_string(Severity s) { return s == Severity::kError ? "error" : "warning"; }

const std::vector<Rule>& rules() {
  static const std::vector<Rule> kRules = {
      {"ASPECT_MISSING_AUTH", Severity::kError, "service has no dmcc:hasAuthentication link"},
      {"ASPECT_MISSING_CATALOG", Severity::kWarning, "provider has no described dmcc:hasOfferCatalog target"},
      {"ASPECT_MISSING_FUNCTION", Severity::kError, "service has no dmcc:hasFunction link"},
      {"ASPECT_MISSING_INTERACTION", Severity::kError, "service has no dmcc:hasInteractionPoint link"},
      {"ASPECT_MISSING_PRICING", Severity::kError, "service has no dmcc:hasPricingPlan link"},
      {"ASPECT_MISSING_SLA", Severity::kError, "service has no dmcc:hasServiceCommitment link"},
      {"CURRENCY_UNKNOWN", Severity::kWarning, "currency is not an ISO 4217 code"},
      {"FIELD_MISSING", Severity::kError, "a required value is absent (provider name, compensation amount, ...)"},
      {"MALFORMED_LITERAL", Severity::kError, "a literal cannot be read as the expected number, boolean or term"},
      {"PARAM_DUP", Severity::kError, "two parameters of one function share a title"},
      {"PRICE_BOUNDS", Severity::kError, "plan minPrice exceeds maxPrice"},
      {"PRICE_NEGATIVE", Severity::kError, "negative unit price, cap or allowance"},
      {"REF_DANGLING", Severity::kError, "a dmcc link points at a node with no triples"},
      {"SLA_COMP_MISMATCH", Severity::kError, "a term has different numbers of definitions and compensations"},
      {"SLA_COMP_POSITIONAL", Severity::kWarning, "compensations paired with definitions by node order"},
      {"SLA_INTERVAL_INVALID", Severity::kError, "interval with a missing bound, min > max, or percent outside [0, 100]"},
      {"SLA_RANGE_OVERLAP", Severity::kWarning, "two [min, max) ranges of one term overlap"},
      {"TYPO_ALIAS", Severity::kWarning, "a registered misspelling such as ccsla:cointainsTerm is used"},
      {"UNIT_UNKNOWN", Severity::kWarning, "unit code is not in the unit table"},
      {"UNKNOWN_TERM", Severity::kWarning, "predicate or class is not in the vocabulary registry (strict mode)"},
  };
  return kRules;
}

const Rule* find_rule(std::string_view code) {
  for (const auto& r : rules())
    if (r.code == code) return &r;
  return nullptr;
}

std::size_t Report::errors() const {
  return std::count_if(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

std::size_t Report::warnings() const { return diagnostics.size() - errors(); }

std::vector<const Diagnostic*> Report::with_code(std::string_view code) const {
  std::vector<const Diagnostic*> out;
  for (const auto& d : diagnostics)
    if (d.code == code) out.push_back(&d);
  return out;
}

namespace {

using model::Issue;
using MK = model::ModelError::Kind;
using rdf::Graph;

// Report order: node, then code.
struct ByNode {
  bool operator()(const Diagnostic& a, const Diagnostic& b) const {
    return std::tie(a.node, a.code, a.message, a.severity) < std::tie(b.node, b.code, b.message, b.severity);
  }
};

class Checker {
 public:
  explicit Checker(const Graph& g) : g_(g), reg_(vocab::TermRegistry::instance()) {}

  Report finish() {
    Report r;
    r.diagnostics.assign(out_.begin(), out_.end());
    return r;
  }

  void emit(std::string_view code, const Term& node, std::string message) {
    const Rule* rule = find_rule(code);
    out_.insert(Diagnostic{rule->severity, std::string(code), node, std::move(message)});
  }

  // Objects of `s` under every spelling of `curie`.
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

  std::vector<Term> typed(std::string_view curie) const {
    return g_.subjects(vocab::term("rdf:type"), vocab::term(curie));
  }

  bool described(const Term& t) const { return !t.is_literal() && g_.has_subject(t); }

  void issues(const std::vector<Issue>& found) {
    for (const auto& i : found) {
      if (i.kind == Issue::Kind::kPositionalPairing) {
        emit("SLA_COMP_POSITIONAL", i.node, i.message);
        continue;
      }
      const std::string msg = i.where + ": " + i.message;
      switch (i.error) {
        case MK::kUnknownUnit: emit("UNIT_UNKNOWN", i.node, msg); break;
        case MK::kMalformedInterval: emit("SLA_INTERVAL_INVALID", i.node, msg); break;
        case MK::kDanglingReference: emit("REF_DANGLING", i.node, msg); break;
        case MK::kMissingField: emit("FIELD_MISSING", i.node, msg); break;
        default: emit("MALFORMED_LITERAL", i.node, msg); break;
      }
    }
  }

  void providers() {
    for (const auto& p : typed("dmcc:MLServiceProvider")) {
      const auto catalogs = objects(p, "dmcc:hasOfferCatalog");
      if (catalogs.empty()) {
        emit("ASPECT_MISSING_CATALOG", p, "provider has no catalogue");
      } else if (std::none_of(catalogs.begin(), catalogs.end(), [&](const Term& c) { return described(c); })) {
        emit("ASPECT_MISSING_CATALOG", p, "catalogue " + catalogs.front().to_ntriples() + " is not described");
      }
      std::vector<Issue> found;
      model::extract_provider(g_, p, &found);
      // Service-level problems are reported once, by services().
      std::erase_if(found, [&](const Issue& i) { return i.node != p; });
      issues(found);
    }
  }

  void services() {
    struct Aspect {
      std::string_view link;
      std::string_view code;
      std::set<Term>* targets;
    };
    const Aspect aspects[] = {
        {"dmcc:hasAuthentication", "ASPECT_MISSING_AUTH", &auth_},
        {"dmcc:hasInteractionPoint", "ASPECT_MISSING_INTERACTION", &interaction_},
        {"dmcc:hasPricingPlan", "ASPECT_MISSING_PRICING", &plans_},
        {"dmcc:hasServiceCommitment", "ASPECT_MISSING_SLA", &slas_},
        {"dmcc:hasFunction", "ASPECT_MISSING_FUNCTION", &functions_},
    };
    for (const auto& s : typed("dmcc:MLService")) {
      for (const auto& a : aspects) {
        const auto targets = objects(s, a.link);
        if (targets.empty()) {
          emit(a.code, s, "service has no " + std::string(a.link) + " link");
          continue;
        }
        for (const auto& t : targets) {
          if (t.is_literal()) {
            emit("MALFORMED_LITERAL", s, std::string(a.link) + ": link target is a literal");
          } else if (!described(t)) {
            emit("REF_DANGLING", s, std::string(a.link) + ": target " + t.to_ntriples() + " is not described");
          } else {
            a.targets->insert(t);
          }
        }
      }
    }
  }

  // Aspect nodes: everything typed as the aspect class plus every described
  // target of a service link.
  std::set<Term> gather(std::set<Term>& linked, std::string_view cls) const {
    std::set<Term> all = linked;
    for (const auto& t : typed(cls)) all.insert(t);
    return all;
  }

  void slas() {
    for (const auto& node : gather(slas_, "ccsla:SLA")) {
      std::vector<Issue> found;
      const auto sla = model::extract_sla(g_, node, &found);
      issues(found);
      for (const auto& term : sla.terms) sla_term(term);
    }
  }

  void sla_term(const model::SlaTerm& term) {
    const Term& node = *term.node;
    if (term.definitions.size() != term.compensations.size())
      emit("SLA_COMP_MISMATCH", node,
           std::to_string(term.definitions.size()) + " definitions, " + std::to_string(term.compensations.size()) +
               " compensations");
    const Decimal hundred = Decimal::from_integer(100);
    for (const auto& iv : term.definitions) {
      const std::string range = "[" + iv.min.to_string() + ", " + iv.max.to_string() + "]";
      if (iv.min > iv.max) emit("SLA_INTERVAL_INVALID", node, range + ": min exceeds max");
      if (iv.unit == "percent" && (iv.min < Decimal() || iv.max > hundred))
        emit("SLA_INTERVAL_INVALID", node, range + ": percent outside [0, 100]");
    }
    for (std::size_t i = 0; i < term.definitions.size(); ++i) {
      for (std::size_t j = i + 1; j < term.definitions.size(); ++j) {
        const auto& a = term.definitions[i];
        const auto& b = term.definitions[j];
        if (a.unit != b.unit || a.min >= a.max || b.min >= b.max) continue;
        if (a.min < b.max && b.min < a.max)
          emit("SLA_RANGE_OVERLAP", node,
               "[" + a.min.to_string() + ", " + a.max.to_string() + ") overlaps [" + b.min.to_string() + ", " +
                   b.max.to_string() + ")");
      }
    }
    for (const auto& c : term.compensations) {
      if (c.amount < Decimal()) emit("PRICE_NEGATIVE", node, "negative compensation " + c.amount.to_string());
    }
  }

  void currency(const Term& node, const std::optional<std::string>& code) {
    if (code && !code->empty() && !reg_.is_currency(*code))
      emit("CURRENCY_UNKNOWN", node, "'" + *code + "' is not an ISO 4217 currency");
  }

  void plans() {
    for (const auto& node : gather(plans_, "ccpricing:PricingPlan")) {
      std::vector<Issue> found;
      const auto plan = model::extract_pricing(g_, node, &found);
      issues(found);
      if (plan.min_price && plan.max_price && *plan.min_price > *plan.max_price)
        emit("PRICE_BOUNDS", node,
             "minPrice " + plan.min_price->to_string() + " exceeds maxPrice " + plan.max_price->to_string());
      for (const auto& [curie, value] : {std::pair{"minPrice", plan.min_price}, std::pair{"maxPrice", plan.max_price}})
        if (value && *value < Decimal()) emit("PRICE_NEGATIVE", node, std::string(curie) + " " + value->to_string());
      currency(node, plan.currency);
      for (const auto& c : plan.compounds) {
        const Term& cn = *c.node;
        if (c.price_spec) {
          const auto& spec = *c.price_spec;
          const Term sn = spec.node.value_or(cn);
          if (spec.unit_price && *spec.unit_price < Decimal())
            emit("PRICE_NEGATIVE", sn, "unit price " + spec.unit_price->to_string());
          if (spec.max_charge && *spec.max_charge < Decimal())
            emit("PRICE_NEGATIVE", sn, "gr:max " + spec.max_charge->to_string());
          currency(sn, spec.currency);
        }
        if (c.allowance && c.allowance->amount < Decimal())
          emit("PRICE_NEGATIVE", cn, "allowance " + c.allowance->amount.to_string());
      }
    }
  }

  void functions() {
    for (const auto& node : gather(functions_, "ccdm:MLFunction")) {
      std::vector<Issue> found;
      const auto f = model::extract_function(g_, node, &found);
      issues(found);
      // Parameters come back sorted by title.
      for (std::size_t i = 1; i < f.parameters.size(); ++i)
        if (f.parameters[i].title == f.parameters[i - 1].title &&
            (i < 2 || f.parameters[i - 2].title != f.parameters[i].title))
          emit("PARAM_DUP", node, "parameter title '" + f.parameters[i].title + "' is used more than once");
    }
  }

  void others() {
    for (const auto& node : gather(auth_, "dmcc:ServiceAuthentication")) {
      std::vector<Issue> found;
      model::extract_authentication(g_, node, &found);
      issues(found);
    }
    for (const auto& node : gather(interaction_, "dmcc:Interaction")) {
      std::vector<Issue> found;
      model::extract_interaction(g_, node, &found);
      issues(found);
    }
  }

  void aliases() {
    for (const auto& t : g_) {
      const std::string& p = t.predicate.as_iri().value();
      if (reg_.is_alias_iri(p))
        emit("TYPO_ALIAS", t.subject,
             reg_.compact(p) + " is read as " + reg_.compact(reg_.canonical_iri(p)));
    }
  }

  void unknown_terms() {
    const Term type = vocab::term("rdf:type");
    auto known = [&](const std::string& iri) { return reg_.find_iri(iri) || reg_.is_alias_iri(iri); };
    for (const auto& t : g_) {
      const std::string& p = t.predicate.as_iri().value();
      if (!known(p)) emit("UNKNOWN_TERM", t.predicate, "predicate is not in the vocabulary registry");
      if (t.predicate == type && t.object.is_iri() && !known(t.object.as_iri().value()))
        emit("UNKNOWN_TERM", t.object, "class is not in the vocabulary registry");
    }
  }

  void run() {
    providers();
    services();
    slas();
    plans();
    functions();
    others();
    aliases();
  }

 private:
  const Graph& g_;
  const vocab::TermRegistry& reg_;
  std::set<Diagnostic, ByNode> out_;
  std::set<Term> auth_, interaction_, plans_, slas_, functions_;
};

}  // namespace

Report validate(const rdf::Graph& g) {
  Checker c(g);
  c.run();
  return c.finish();
}

Report validate_strict(const rdf::Graph& g) {
  Checker c(g);
  c.run();
  c.unknown_terms();
  return c.finish();
}

model::Json to_json(const Report& r) {
  model::Json j;
  j["conformant"] = r.conformant();
  j["errors"] = r.errors();
  j["warnings"] = r.warnings();
  j["diagnostics"] = model::Json::array();
  for (const auto& d : r.diagnostics)
    j["diagnostics"].push_back(model::Json{{"severity", to_string(d.severity)},
                                           {"code", d.code},
                                           {"node", d.node.to_ntriples()},
                                           {"message", d.message}});
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& d : r.diagnostics)
    out << to_string(d.severity) << ' ' << d.code << ' ' << d.node.to_ntriples() << ": " << d.message << '\n';
  out << r.errors() << " error(s), " << r.warnings() << " warning(s)\n";
  return out.str();
}

}  // namespace dmcc::validate
