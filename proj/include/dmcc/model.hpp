#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmcc/decimal.hpp"
#include "dmcc/rdf/graph.hpp"

namespace dmcc::model {

using rdf::Term;

class ModelError : public std::runtime_error {
 public:
  enum class Kind {
    kNotAProvider,
    kNotAService,
    kMissingField,
    kMalformedLiteral,
    kMalformedBoolean,
    kMalformedInterval,
    kUnexpectedValue,
    kUnknownUnit,
    kDanglingReference,
    kInvariantViolation,
  };

  ModelError(Kind kind, std::string where, const std::string& message);
  Kind kind() const { return kind_; }
  // Predicate curie for extraction errors, field path for lowering errors.
  const std::string& where() const { return where_; }

 private:
  Kind kind_;
  std::string where_;
};

std::string_view to_string(ModelError::Kind kind);

// Recoverable extraction problem. Lenient extraction records these instead of
// throwing and leaves the affected field absent.
struct Issue {
  enum class Kind {
    kError,              // a ModelError that was not thrown
    kPositionalPairing,  // SLA compensations paired by node order
  };
  Kind kind;
  ModelError::Kind error;
  Term node;
  std::string where;
  std::string message;
};

// ---- Provider ---------------------------------------------------------------

struct PostalAddress {
  std::optional<std::string> country;
  std::optional<std::string> locality;
  friend bool operator==(const PostalAddress&, const PostalAddress&) = default;
};

struct ContactPoint {
  std::optional<std::string> contact_type;
  std::vector<std::string> languages;
  std::optional<std::string> email;
  friend bool operator==(const ContactPoint&, const ContactPoint&) = default;
};

// ---- Interaction ------------------------------------------------------------

struct InteractionParameter {
  std::string name;
  std::optional<std::string> description;
  friend bool operator==(const InteractionParameter&, const InteractionParameter&) = default;
};

struct InteractionPoint {
  std::optional<Term> node;
  std::optional<std::string> label;
  std::optional<std::string> http_method;
  std::optional<std::string> url_template;
  std::optional<std::string> content_type;
  std::vector<InteractionParameter> parameters;  // sorted by name
  friend bool operator==(const InteractionPoint&, const InteractionPoint&) = default;
};

// ---- Authentication ---------------------------------------------------------

enum class Requirement { kAll, kNone, kPartial };
enum class Mechanism { kDirect, kOAuth, kOther };
enum class Credential { kApiKey, kUsernamePassword, kToken, kOther };
enum class Transmission { kViaUri, kViaHeader, kOther };

struct Authentication {
  std::optional<Term> node;
  std::optional<std::string> label;
  std::optional<std::string> description;
  std::optional<Requirement> requires_auth;
  std::optional<Mechanism> mechanism;
  std::string mechanism_label;  // type IRI when kOther, may be empty
  std::optional<Credential> credential;
  std::string credential_label;  // type IRI when kOther, may be empty
  std::string grounding_field;   // waa:isGroundedIn for API keys
  std::optional<Transmission> transmission;
  std::string transmission_label;  // IRI when kOther
  friend bool operator==(const Authentication&, const Authentication&) = default;
};

// ---- SLA --------------------------------------------------------------------

struct Interval {
  Decimal min;
  Decimal max;
  std::string unit;  // normalized unitText ("percent"), raw text if unknown
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class CompensationKind { kPercentOfBill, kServiceCredits };

struct Compensation {
  CompensationKind kind = CompensationKind::kServiceCredits;
  Decimal amount;
  friend bool operator==(const Compensation&, const Compensation&) = default;
};

struct SlaTerm {
  std::optional<Term> node;
  std::string name;
  std::optional<std::string> description;
  // Sorted by (min, max); compensations[i] belongs to definitions[i].
  std::vector<Interval> definitions;
  std::vector<Compensation> compensations;
  friend bool operator==(const SlaTerm&, const SlaTerm&) = default;
};

struct SlaAgreement {
  std::optional<Term> node;
  std::optional<std::string> label;
  std::vector<SlaTerm> terms;
  const SlaTerm* find_term(std::string_view name) const;
  friend bool operator==(const SlaAgreement&, const SlaAgreement&) = default;
};

// ---- Pricing ----------------------------------------------------------------

struct Quantity {
  Decimal amount;
  std::string unit;  // UN/CEFACT code
  friend bool operator==(const Quantity&, const Quantity&) = default;
};

struct PriceSpec {
  std::optional<Term> node;
  std::optional<Decimal> unit_price;  // absent: nothing is billed
  std::optional<std::string> currency;
  std::string unit;  // own unit, else the allowance's unit
  std::optional<Decimal> max_charge;
  friend bool operator==(const PriceSpec&, const PriceSpec&) = default;
};

struct Instance {
  std::optional<Term> node;
  std::optional<std::string> label;
  std::optional<Decimal> ram_gb;
  std::optional<std::string> cpu_model;
  std::optional<std::int64_t> cores;
  std::optional<Decimal> storage_gb;
  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Region {
  std::optional<Term> node;
  std::string code;
  std::optional<std::string> display_name;
  friend bool operator==(const Region&, const Region&) = default;
};

struct Compound {
  std::optional<Term> node;
  std::optional<PriceSpec> price_spec;
  std::optional<Instance> instance;
  std::optional<Region> region;
  // Free amount carried by the price specification (gr:includesObject).
  std::optional<Quantity> allowance;
  friend bool operator==(const Compound&, const Compound&) = default;
};

struct PricingPlan {
  std::optional<Term> node;
  std::string name;
  std::optional<Decimal> min_price;
  std::optional<Decimal> max_price;
  std::string currency;
  std::vector<Compound> compounds;
  friend bool operator==(const PricingPlan&, const PricingPlan&) = default;
};

// ---- Function ---------------------------------------------------------------

struct Parameter {
  std::optional<Term> node;
  std::string title;
  std::optional<std::string> description;
  std::optional<std::string> default_value;
  bool mandatory = true;
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct DataInputSpec {
  std::optional<Term> node;
  std::optional<std::string> description;
  std::optional<std::string> format;
  friend bool operator==(const DataInputSpec&, const DataInputSpec&) = default;
};

enum class OutputKind { kModel, kModelEvaluation, kData };

struct OutputSpec {
  std::optional<Term> node;
  OutputKind kind = OutputKind::kData;
  std::optional<std::string> format;
  std::optional<std::string> storage_bucket;
  std::optional<std::string> title;
  std::optional<std::string> description;
  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct MLFunction {
  std::optional<Term> node;
  std::string name;
  std::optional<std::string> description;
  std::optional<Term> parameter_set;  // the ccdm:MLServiceInputParameters node
  std::vector<Parameter> parameters;  // sorted by title
  std::vector<DataInputSpec> inputs;
  std::vector<OutputSpec> outputs;
  friend bool operator==(const MLFunction&, const MLFunction&) = default;
};

// ---- Service and provider ---------------------------------------------------

struct MLService {
  std::optional<Term> node;
  std::optional<std::string> label;
  std::optional<std::string> description;
  std::optional<InteractionPoint> interaction;
  std::optional<SlaAgreement> sla;
  std::vector<MLFunction> functions;  // one per dmcc:hasFunction link
  std::optional<Authentication> authentication;
  std::vector<PricingPlan> pricing;
  const MLFunction* function() const { return functions.empty() ? nullptr : &functions.front(); }
  friend bool operator==(const MLService&, const MLService&) = default;
};

struct ServiceProvider {
  std::optional<Term> node;
  std::optional<std::string> label;
  std::optional<std::string> description;
  std::string name;
  std::string legal_name;
  std::optional<std::string> naics;
  std::optional<std::string> url;
  std::optional<PostalAddress> location;
  std::vector<ContactPoint> contacts;
  std::vector<MLService> services;
  std::optional<Term> catalog;  // opaque dmcc:hasOfferCatalog target
  friend bool operator==(const ServiceProvider&, const ServiceProvider&) = default;
};

// ---- Vocabulary mapping ----------------------------------------------------

// One row per typed field: the model type, the field name used in the JSON
// shape ("" for the class itself) and the vocabulary term it is read from.
struct FieldMapping {
  std::string_view type;
  std::string_view field;
  std::string_view curie;
};

const std::vector<FieldMapping>& field_mappings();

// ---- Extraction -------------------------------------------------------------

// Every subject typed dmcc:MLServiceProvider, in term order.
std::vector<Term> list_providers(const rdf::Graph& g);
// Every subject typed dmcc:MLService, in term order.
std::vector<Term> list_services(const rdf::Graph& g);

// The extract_* functions throw ModelError. When `issues` is given they
// record recoverable problems there instead and carry on; only
// not-a-provider / not-a-service still throw.
ServiceProvider extract_provider(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues = nullptr);
MLService extract_service(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues = nullptr);
SlaAgreement extract_sla(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues = nullptr);
PricingPlan extract_pricing(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues = nullptr);
MLFunction extract_function(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues = nullptr);
Authentication extract_authentication(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues = nullptr);
InteractionPoint extract_interaction(const rdf::Graph& g, const Term& node, std::vector<Issue>* issues = nullptr);

// ---- Lowering ---------------------------------------------------------------

// Builds the graph for a provider and everything under it. Nodes that are
// absent get blank labels derived from their parent's label. Throws
// ModelError(kInvariantViolation) naming the offending field.
rdf::Graph lower(const ServiceProvider& provider);
rdf::Graph lower(const MLService& service);
rdf::Graph lower(const SlaAgreement& sla);
rdf::Graph lower(const PricingPlan& plan);

}  // namespace dmcc::model
