#include "dmcc/pricing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dmcc/vocab.hpp"

namespace dmcc::pricing {

std::string_view to_string(PricingError::Kind kind) {
  using K = PricingError::Kind;
  switch (kind) {
    case K::kInvalidUsage: return "invalid-usage";
    case K::kUnknownUnit: return "unknown-unit";
    case K::kNoApplicableCompound: return "no-applicable-compound";
    case K::kAllowanceExceeded: return "allowance-exceeded";
    case K::kAmbiguousScope: return "ambiguous-scope";
    case K::kCurrencyConflict: return "currency-conflict";
    case K::kNoQuotablePlan: return "no-quotable-plan";
  }
  return "unknown";
}

namespace {

using K = PricingError::Kind;
using model::Compound;

std::string canonical(const std::string& unit) {
  if (unit.empty()) return unit;
  return vocab::TermRegistry::instance().canonical_unit(unit);
}

bool in_scope(const Compound& c, const UsageRequest& u) {
  if (c.instance && u.instance && c.instance->node != u.instance) return false;
  if (c.region && u.region && c.region->code != *u.region) return false;
  return true;
}

std::string spec_unit(const Compound& c) { return c.price_spec ? canonical(c.price_spec->unit) : ""; }
std::string allowance_unit(const Compound& c) { return c.allowance ? canonical(c.allowance->unit) : ""; }

// Usage quantities keyed by canonical unit code.
std::map<std::string, Decimal> usage_by_unit(const UsageRequest& usage) {
  const auto& reg = vocab::TermRegistry::instance();
  std::map<std::string, Decimal> out;
  for (const auto& q : usage.quantities) {
    if (!reg.unit(q.unit)) throw PricingError(K::kUnknownUnit, "unit code '" + q.unit + "' is not in the unit table");
    if (q.amount < Decimal()) throw PricingError(K::kInvalidUsage, "negative quantity for " + q.unit);
    if (!out.emplace(canonical(q.unit), q.amount).second)
      throw PricingError(K::kInvalidUsage, "more than one quantity for unit " + q.unit);
  }
  return out;
}

Term compound_node(const Compound& c) { return c.node.value_or(Term::blank("compound")); }

}  // namespace

UsageRequest merge(const UsageRequest& a, const UsageRequest& b) {
  UsageRequest out = a;
  for (const auto& q : b.quantities) {
    auto it = std::find_if(out.quantities.begin(), out.quantities.end(),
                           [&](const model::Quantity& x) { return canonical(x.unit) == canonical(q.unit); });
    if (it == out.quantities.end()) {
      out.quantities.push_back(q);
    } else {
      it->amount += q.amount;
    }
  }
  return out;
}

std::vector<Compound> applicable_compounds(const model::PricingPlan& plan, const UsageRequest& usage) {
  std::set<std::string> units;
  for (const auto& q : usage.quantities) units.insert(canonical(q.unit));
  std::vector<Compound> out;
  for (const auto& c : plan.compounds) {
    if (!in_scope(c, usage)) continue;
    if (units.count(spec_unit(c)) || units.count(allowance_unit(c))) out.push_back(c);
  }
  return out;
}

CostBreakdown quote(const model::PricingPlan& plan, const UsageRequest& usage) {
  const auto quantities = usage_by_unit(usage);
  const auto compounds = applicable_compounds(plan, usage);

  CostBreakdown out;
  out.currency = plan.currency;
  for (const auto& c : compounds) {
    if (!c.price_spec || !c.price_spec->currency || c.price_spec->currency->empty()) continue;
    if (out.currency.empty()) out.currency = *c.price_spec->currency;
    if (*c.price_spec->currency != out.currency)
      throw PricingError(K::kCurrencyConflict, "compound " + compound_node(c).to_ntriples() + " is priced in " +
                                                   *c.price_spec->currency + ", plan in " + out.currency);
  }
  for (const auto& c : compounds)
    if (c.price_spec && c.price_spec->max_charge && (!out.cap || *c.price_spec->max_charge < *out.cap))
      out.cap = c.price_spec->max_charge;

  for (const auto& [unit, amount] : quantities) {
    Decimal allowance;
    bool has_allowance = false;
    std::vector<const Compound*> priced;
    for (const auto& c : compounds) {
      if (allowance_unit(c) == unit) {
        allowance += c.allowance->amount;
        has_allowance = true;
      }
      if (spec_unit(c) == unit && c.price_spec->unit_price) priced.push_back(&c);
    }
    // Several priced compounds that differ only along a dimension the usage
    // left open cannot all apply at once.
    if (priced.size() > 1) {
      std::set<std::optional<Term>> instances;
      std::set<std::string> regions;
      for (const auto* c : priced) {
        if (!usage.instance && c->instance) instances.insert(c->instance->node);
        if (!usage.region && c->region) regions.insert(c->region->code);
      }
      if (instances.size() > 1 || regions.size() > 1)
        throw PricingError(K::kAmbiguousScope, "usage in " + unit +
                                                   " matches compounds for several instances or regions; name one");
    }

    const Decimal applied = std::min(amount, allowance);
    const Decimal remaining = amount - applied;
    if (has_allowance && applied > Decimal()) out.allowance_applied.push_back({applied, unit});
    if (remaining > Decimal()) {
      if (priced.empty()) {
        if (has_allowance)
          throw PricingError(K::kAllowanceExceeded, amount.to_string() + " " + unit + " exceeds the allowance of " +
                                                        allowance.to_string() + " " + unit);
        throw PricingError(K::kNoApplicableCompound, "no compound prices " + unit + " for this usage");
      }
      if (out.cap && out.cap->is_zero())
        throw PricingError(K::kAllowanceExceeded, "plan caps charges at 0 but " + remaining.to_string() + " " + unit +
                                                      " exceed the allowance");
    }
    for (const auto* c : priced) {
      const Decimal price = *c->price_spec->unit_price;
      out.items.push_back({compound_node(*c), unit, remaining, price, remaining * price});
    }
  }

  for (const auto& item : out.items) out.total += item.subtotal;
  if (out.cap && out.total > *out.cap) {
    const Decimal excess = out.total - *out.cap;
    out.items.push_back({plan.node.value_or(Term::blank("plan")), "CAP", Decimal::from_integer(1), -excess, -excess});
    out.total = *out.cap;
  }
  return out;
}

PlanQuote cheapest_plan(const std::vector<model::PricingPlan>& plans, const UsageRequest& usage) {
  std::optional<PlanQuote> best;
  std::string reasons;
  for (const auto& p : plans) {
    try {
      CostBreakdown cost = quote(p, usage);
      if (!best || cost.total < best->cost.total || (cost.total == best->cost.total && p.name < best->plan.name))
        best = PlanQuote{p, std::move(cost)};
    } catch (const PricingError& e) {
      reasons += (reasons.empty() ? "" : "; ") + p.name + ": " + e.what();
    }
  }
  if (!best)
    throw PricingError(K::kNoQuotablePlan, plans.empty() ? "no plans given" : "no plan can quote this usage (" + reasons + ")");
  return *best;
}

model::Json to_json(const CostBreakdown& c) {
  model::Json j;
  j["currency"] = c.currency;
  j["total"] = c.total.to_fixed(2);
  j["items"] = model::Json::array();
  for (const auto& i : c.items)
    j["items"].push_back(model::Json{{"compound", i.compound.to_ntriples()},
                                     {"unit", i.unit},
                                     {"billedQuantity", i.billed_quantity.to_string()},
                                     {"unitPrice", i.unit_price.to_string()},
                                     {"subtotal", i.subtotal.to_fixed(2)}});
  j["allowanceApplied"] = model::Json::array();
  for (const auto& q : c.allowance_applied) j["allowanceApplied"].push_back(model::to_json(q));
  if (c.cap) j["cap"] = c.cap->to_fixed(2);
  return j;
}

model::Json to_json(const UsageRequest& u) {
  model::Json j;
  j["quantities"] = model::Json::array();
  for (const auto& q : u.quantities) j["quantities"].push_back(model::to_json(q));
  if (u.instance) j["instance"] = u.instance->to_ntriples();
  if (u.region) j["region"] = *u.region;
  return j;
}

}  // namespace dmcc::pricing
