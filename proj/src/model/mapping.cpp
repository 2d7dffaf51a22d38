#include "dmcc/model.hpp"

namespace dmcc::model {

const std::vector<FieldMapping>& field_mappings() {
  static const std::vector<FieldMapping> kTable = {
      {"ServiceProvider", "", "dmcc:MLServiceProvider"},
      {"ServiceProvider", "label", "rdfs:label"},
      {"ServiceProvider", "description", "dc:description"},
      {"ServiceProvider", "name", "gr:name"},
      {"ServiceProvider", "legalName", "gr:legalName"},
      {"ServiceProvider", "naics", "gr:hasNAICS"},
      {"ServiceProvider", "url", "s:url"},
      {"ServiceProvider", "location", "s:serviceLocation"},
      {"ServiceProvider", "contacts", "s:contactPoint"},
      {"ServiceProvider", "services", "dmcc:hasMLService"},
      {"ServiceProvider", "catalogRef", "dmcc:hasOfferCatalog"},
      {"PostalAddress", "", "s:PostalAddress"},
      {"PostalAddress", "country", "s:addressCountry"},
      {"PostalAddress", "locality", "s:addressLocality"},
      {"ContactPoint", "", "s:ContactPoint"},
      {"ContactPoint", "contactType", "s:contactType"},
      {"ContactPoint", "languages", "s:availableLanguage"},
      {"ContactPoint", "email", "s:email"},
      {"Language", "", "s:Language"},
      {"Language", "name", "s:name"},

      {"MLService", "", "dmcc:MLService"},
      {"MLService", "label", "rdfs:label"},
      {"MLService", "description", "dc:description"},
      {"MLService", "interaction", "dmcc:hasInteractionPoint"},
      {"MLService", "sla", "dmcc:hasServiceCommitment"},
      {"MLService", "functions", "dmcc:hasFunction"},
      {"MLService", "authentication", "dmcc:hasAuthentication"},
      {"MLService", "pricing", "dmcc:hasPricingPlan"},

      {"InteractionPoint", "", "dmcc:Interaction"},
      {"InteractionPoint", "label", "rdfs:label"},
      {"InteractionPoint", "entryPoint", "dmcc:hasEntryPoint"},
      {"InteractionPoint", "parameters", "dmcc:hasInteractionParameter"},
      {"EntryPoint", "", "s:EntryPoint"},
      {"EntryPoint", "httpMethod", "s:httpMethod"},
      {"EntryPoint", "urlTemplate", "s:urlTemplate"},
      {"EntryPoint", "contentType", "s:contentType"},
      {"InteractionParameter", "name", "s:name"},
      {"InteractionParameter", "description", "dc:description"},

      {"Authentication", "", "dmcc:ServiceAuthentication"},
      {"Authentication", "label", "rdfs:label"},
      {"Authentication", "description", "dc:description"},
      {"Authentication", "requires", "waa:requiresAuthentication"},
      {"Authentication", "mechanism", "waa:hasAuthenticationMechanism"},
      {"Authentication", "credential", "waa:hasInputCredentials"},
      {"Authentication", "groundingField", "waa:isGroundedIn"},
      {"Authentication", "transmission", "waa:wayOfSendingInformation"},

      {"SlaAgreement", "", "ccsla:SLA"},
      {"SlaAgreement", "label", "rdfs:label"},
      {"SlaAgreement", "terms", "ccsla:containsTerm"},
      {"SlaTerm", "", "ccsla:Term"},
      {"SlaTerm", "name", "dc:title"},
      {"SlaTerm", "description", "dc:description"},
      {"SlaTerm", "definitions", "ccsla:hasDefinition"},
      {"SlaTerm", "compensations", "ccsla:hasCompensation"},
      {"Definition", "", "ccsla:Definition"},
      {"Definition", "value", "ccsla:hasDefinitionValue"},
      {"Interval", "", "s:QuantitativeValue"},
      {"Interval", "min", "s:minValue"},
      {"Interval", "max", "s:maxValue"},
      {"Interval", "unit", "s:unitText"},
      {"Compensation", "", "ccsla:Compensation"},
      {"Compensation", "amount", "s:value"},
      {"Compensation", "kind", "s:unitText"},

      {"PricingPlan", "", "ccpricing:PricingPlan"},
      {"PricingPlan", "name", "gr:name"},
      {"PricingPlan", "currency", "gr:priceCurrency"},
      {"PricingPlan", "minPrice", "gr:hasMinCurrencyValue"},
      {"PricingPlan", "maxPrice", "gr:hasMaxCurrencyValue"},
      {"PricingPlan", "compounds", "ccpricing:hasCompound"},
      {"Compound", "", "ccpricing:Compound"},
      {"Compound", "priceSpec", "ccpricing:hasPriceSpecification"},
      {"Compound", "instance", "ccpricing:hasInstance"},
      {"Compound", "region", "ccpricing:hasRegion"},
      {"Compound", "allowance", "gr:includesObject"},
      {"PriceSpec", "", "gr:PriceSpecification"},
      {"PriceSpec", "unitPrice", "gr:hasCurrencyValue"},
      {"PriceSpec", "currency", "gr:priceCurrency"},
      {"PriceSpec", "unit", "gr:hasUnitOfMeasurement"},
      {"PriceSpec", "maxCharge", "gr:max"},
      {"Quantity", "", "gr:TypeAndQualityNode"},
      {"Quantity", "amount", "gr:amountOfThisGood"},
      {"Quantity", "unit", "gr:hasUnitOfMeasurement"},
      {"Instance", "", "ccinstances:Instance"},
      {"Instance", "label", "rdfs:label"},
      {"Instance", "ramGB", "ccinstances:hasRAM"},
      {"Instance", "cpuModel", "ccinstances:cpu_model"},
      {"Instance", "cores", "ccinstances:cores"},
      {"Instance", "storageGB", "ccinstances:hasStorage"},
      {"Ram", "", "ccinstances:ram"},
      {"Cpu", "", "ccinstances:cpu"},
      {"Cpu", "link", "ccinstances:hasCPU"},
      {"GigabyteQuantity", "value", "s:value"},
      {"GigabyteQuantity", "unitCode", "s:unitCode"},
      {"Region", "", "ccregions:Region"},
      {"Region", "code", "ccregions:regionCode"},
      {"Region", "displayName", "s:name"},

      {"MLFunction", "", "ccdm:MLFunction"},
      {"MLFunction", "name", "dc:title"},
      {"MLFunction", "description", "dc:description"},
      {"MLFunction", "parameterSet", "ccdm:hasInputParameters"},
      {"MLFunction", "inputs", "mls:hasInput"},
      {"MLFunction", "outputs", "mls:hasOutput"},
      {"ParameterSet", "", "ccdm:MLServiceInputParameters"},
      {"ParameterSet", "parameters", "ccdm:hasInputParameter"},
      {"Parameter", "", "ccdm:MLServiceInputParameter"},
      {"Parameter", "title", "dc:title"},
      {"Parameter", "description", "dc:description"},
      {"Parameter", "defaultValue", "ccdm:defaultvalue"},
      {"Parameter", "mandatory", "ccdm:mandatory"},
      {"DataInputSpec", "", "ccdm:MLServiceInput"},
      {"DataInputSpec", "description", "dc:description"},
      {"DataInputSpec", "format", "dc:format"},
      {"OutputSpec", "", "ccdm:MLServiceOutput"},
      {"OutputSpec", "kind", "rdf:type"},
      {"OutputSpec", "format", "dc:format"},
      {"OutputSpec", "storageBucket", "ccdm:storagebucket"},
      {"OutputSpec", "title", "dc:title"},
      {"OutputSpec", "description", "dc:description"},
  };
  return kTable;
}

}  // namespace dmcc::model
