#include "dmcc/sla.hpp"

#include <algorithm>

#include "dmcc/vocab.hpp"

namespace dmcc::sla {

std::string_view to_string(SlaError::Kind kind) {
  switch (kind) {
    case SlaError::Kind::kUnknownTerm: return "unknown-term";
    case SlaError::Kind::kUnitMismatch: return "unit-mismatch";
    case SlaError::Kind::kUnpairedDefinition: return "unpaired-definition";
  }
  return "unknown";
}

CompensationResult compensation_for(const model::SlaAgreement& sla, const Observation& obs) {
  const model::SlaTerm* term = sla.find_term(obs.term_name);
  if (!term) throw SlaError(SlaError::Kind::kUnknownTerm, "agreement has no term '" + obs.term_name + "'");

  if (!obs.unit.empty()) {
    const auto& reg = vocab::TermRegistry::instance();
    const std::string unit = reg.normalize_unit_text(obs.unit).value_or(obs.unit);
    for (const auto& iv : term->definitions)
      if (!iv.unit.empty() && iv.unit != unit)
        throw SlaError(SlaError::Kind::kUnitMismatch,
                       "observation in '" + unit + "' but term '" + term->name + "' is in '" + iv.unit + "'");
  }

  const auto& defs = term->definitions;
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < defs.size() && !hit; ++i)
    if (defs[i].min <= obs.value && obs.value < defs[i].max) hit = i;
  if (!hit) {
    for (std::size_t i = 0; i < defs.size() && !hit; ++i) {
      if (obs.value != defs[i].max) continue;
      const bool higher = std::any_of(defs.begin(), defs.end(), [&](const auto& d) { return d.min == defs[i].max; });
      if (!higher) hit = i;
    }
  }
  if (!hit) return {};
  if (*hit >= term->compensations.size())
    throw SlaError(SlaError::Kind::kUnpairedDefinition, "matched range has no compensation");
  return {hit, term->compensations[*hit]};
}

Decimal compensation_amount(const CompensationResult& result, Decimal billed) {
  if (!result.compensation) return Decimal();
  const auto& c = *result.compensation;
  if (c.kind == model::CompensationKind::kServiceCredits) return c.amount;
  return billed.percent(c.amount);
}

}  // namespace dmcc::sla
