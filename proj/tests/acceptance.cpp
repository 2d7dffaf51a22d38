// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dmcc/broker.hpp"
#include "dmcc/cli.hpp"
#include "dmcc/model.hpp"
#include "dmcc/pricing.hpp"
#include "dmcc/query.hpp"
#include "dmcc/rdf/isomorphism.hpp"
#include "dmcc/rdf/turtle.hpp"
#include "dmcc/sla.hpp"
#include "dmcc/validate.hpp"
#include "dmcc/vocab.hpp"
#include "pricing_oracle.hpp"
#include "query_oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace dmcc;
using rdf::Graph;
using rdf::Term;
using testing::fixture_path;
using testing::load_fixture;

constexpr double kTimeLimitSeconds = 5.0;

Decimal D(std::string_view s) { return *Decimal::parse(s); }
Term B(const std::string& label) { return Term::blank(label); }
Term V(std::string_view curie) { return vocab::term(curie); }

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream ss;
    ss << what << ": got " << got << ", want " << want;
    expect(got == want, ss.str());
  }
  void note(std::string s) { notes_ = std::move(s); }

  int checks() const { return checks_; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::vector<std::string> all_fixtures() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(DMCC_FIXTURE_DIR))
    if (e.is_regular_file() && e.path().extension() == ".ttl")
      out.push_back(std::filesystem::relative(e.path(), DMCC_FIXTURE_DIR).generic_string());
  std::sort(out.begin(), out.end());
  return out;
}

// ---- AC1 --------------------------------------------------------------------

void listings(Check& c) {
  int parsed = 0;
  for (const auto& f : all_fixtures()) {
    if (f.rfind("listings/", 0) != 0 && f != "full.ttl") continue;
    try {
      const Graph g = load_fixture(f);
      c.expect(rdf::isomorphic(rdf::parse_turtle(rdf::serialize_turtle(g)), g), f + ": Turtle round trip");
      c.expect(rdf::isomorphic(rdf::parse_turtle(rdf::serialize_ntriples(g)), g), f + ": N-Triples round trip");
      ++parsed;
    } catch (const std::exception& e) {
      c.expect(false, f + ": " + e.what());
    }
  }
  c.expect(parsed >= 10, "listing fixtures present");

  const Graph g = load_fixture("full.ttl");
  const auto provider = model::extract_provider(g, B("MLProvider"));
  c.equal(provider.legal_name, "U. of Granada", "legalName");
  c.equal(provider.naics.value_or(""), "541519", "NAICS");

  const auto fn = model::extract_function(g, B("RandomForest_Function"));
  const auto ntrees = std::find_if(fn.parameters.begin(), fn.parameters.end(),
                                   [](const model::Parameter& p) { return p.title == "ntrees"; });
  c.expect(ntrees != fn.parameters.end(), "parameter ntrees present");
  if (ntrees != fn.parameters.end()) {
    c.equal(ntrees->default_value.value_or(""), "100", "ntrees default");
    c.expect(!ntrees->mandatory, "ntrees is optional");
  }

  const auto free = model::extract_pricing(g, B("MLServicePricing"));
  c.expect(free.compounds.size() == 1 && free.compounds[0].allowance && free.compounds[0].price_spec,
           "free plan has one compound with allowance and price specification");
  if (!free.compounds.empty() && free.compounds[0].allowance && free.compounds[0].price_spec) {
    const auto& cp = free.compounds[0];
    c.expect(cp.allowance->amount == D("250") && cp.allowance->unit == "HRS", "allowance 250 HRS");
    c.expect(cp.price_spec->max_charge == D("0.00"), "gr:max 0.00");
    c.expect(cp.instance && cp.instance->ram_gb == D("64"), "RAM 64 GB");
    c.expect(cp.instance && cp.instance->cpu_model == "Intel i7", "CPU Intel i7");
  }
  // The unit code itself, as written.
  const Graph inst = load_fixture("listings/instance.ttl");
  const auto ram = inst.object(B("InstanceFree"), V("ccinstances:hasRAM"));
  c.expect(ram && inst.object(*ram, V("s:unitCode")) == Term::literal("E34") &&
               inst.object(*ram, V("s:value")) == Term::literal("64"),
           "RAM literal 64 E34");

  const auto km = model::extract_function(g, B("KMeans_Function"));
  c.expect(km.outputs.size() == 1 && km.outputs[0].storage_bucket == "dicits://models/", "storage bucket");
  c.note(std::to_string(parsed) + " listing fixtures");
}

// ---- AC2 --------------------------------------------------------------------

void sla_tables(Check& c) {
  using model::CompensationKind;
  const auto table = model::extract_sla(load_fixture("sla-table.ttl"), B("TableSLA"));
  const auto prose = model::extract_sla(load_fixture("full.ttl"), B("MLServiceSLA"));
  const auto mup = [](const model::SlaAgreement& sla, std::string_view v) {
    return sla::compensation_for(sla, {"MUP", D(v), "percent"});
  };
  const auto expect_comp = [&](const model::SlaAgreement& sla, const char* v, CompensationKind kind, const char* amount,
                               const std::string& label) {
    const auto r = mup(sla, v);
    c.expect(r.compensation && r.compensation->kind == kind && r.compensation->amount == D(amount),
             label + " at " + v + " should be " + amount);
  };
  expect_comp(table, "98.50", CompensationKind::kPercentOfBill, "25", "table");
  expect_comp(table, "99.50", CompensationKind::kPercentOfBill, "10", "table");
  c.expect(!mup(table, "100.00").compensation, "table at 100.00 should be none");

  for (const char* v : {"0", "50", "98.00", "98.99", "98.9999"})
    expect_comp(prose, v, CompensationKind::kServiceCredits, "30", "prose");
  for (const char* v : {"99.00", "99.50", "99.98", "99.989"})
    expect_comp(prose, v, CompensationKind::kServiceCredits, "10", "prose");
  c.expect(!mup(prose, "100").compensation, "prose at 100 should be none");
}

// ---- AC3 --------------------------------------------------------------------

void six_aspects(Check& c) {
  const auto full = validate::validate(load_fixture("full.ttl"));
  c.equal(full.errors(), 0u, "full.ttl errors");
  const std::map<std::string, std::string> deletions{
      {"missing-auth.ttl", "ASPECT_MISSING_AUTH"},
      {"missing-interaction.ttl", "ASPECT_MISSING_INTERACTION"},
      {"missing-pricing.ttl", "ASPECT_MISSING_PRICING"},
      {"missing-sla.ttl", "ASPECT_MISSING_SLA"},
      {"missing-function.ttl", "ASPECT_MISSING_FUNCTION"},
  };
  for (const auto& [file, code] : deletions) {
    const auto r = validate::validate(load_fixture(file));
    std::vector<std::string> errors;
    for (const auto& d : r.diagnostics)
      if (d.severity == validate::Severity::kError) errors.push_back(d.code);
    c.expect(errors == std::vector<std::string>{code}, file + ": expected only " + code);
  }
}

// ---- AC4 --------------------------------------------------------------------

void query_oracle(Check& c) {
  std::mt19937 rng(20240611);
  int compared = 0, nonempty = 0;
  std::size_t max_triples = 0;
  for (int graph = 0; graph < 25; ++graph) {
    const auto g = testing::random_query_graph(rng, 200);
    max_triples = std::max(max_triples, g.size());
    for (const auto& text : testing::oracle_templates()) {
      const auto q = query::parse_query(text);
      auto got = testing::rendered_rows(query::evaluate(g, q));
      std::sort(got.begin(), got.end());
      c.expect(got == testing::oracle_rows(g, q), "graph " + std::to_string(graph) + ": " + text);
      ++compared;
      nonempty += !got.empty();
    }
  }
  c.expect(max_triples <= 200, "graphs stay within 200 triples");
  c.note(std::to_string(compared) + " graph/template pairs, " + std::to_string(nonempty) + " non-empty");
}

// ---- AC5 --------------------------------------------------------------------

// Straight from the triples: hours beyond any HRS allowance at every HRS
// price of a plan, capped by gr:max; cheapest plan per service.
std::optional<Decimal> hourly_oracle(const Graph& g, const Term& service, std::int64_t hours) {
  const auto& reg = vocab::TermRegistry::instance();
  std::optional<Decimal> best;
  for (const auto& plan : g.objects(service, V("dmcc:hasPricingPlan"))) {
    Decimal allowance, total;
    std::optional<Decimal> cap;
    bool priced = false;
    for (const auto& cp : g.objects(plan, V("ccpricing:hasCompound")))
      for (const auto& spec : g.objects(cp, V("ccpricing:hasPriceSpecification")))
        for (const auto& q : g.objects(spec, V("gr:includesObject"))) {
          const auto unit = g.object(q, V("gr:hasUnitOfMeasurement"));
          const auto value = g.object(q, V("gr:amountOfThisGood"));
          if (unit && value && reg.canonical_unit(unit->text()) == "HRS") allowance += D(value->text());
        }
    for (const auto& cp : g.objects(plan, V("ccpricing:hasCompound"))) {
      for (const auto& spec : g.objects(cp, V("ccpricing:hasPriceSpecification"))) {
        const auto unit = g.object(spec, V("gr:hasUnitOfMeasurement"));
        if (!unit || reg.canonical_unit(unit->text()) != "HRS") continue;
        if (const auto max = g.object(spec, V("gr:max"))) cap = cap ? std::min(*cap, D(max->text())) : D(max->text());
        const auto price = g.object(spec, V("gr:hasCurrencyValue"));
        if (!price) continue;
        const Decimal billed = std::max(Decimal(), Decimal::from_integer(hours) - allowance);
        total += D(price->text()) * billed;
        priced = true;
      }
    }
    if (!priced) continue;
    if (cap && total > *cap) total = *cap;
    if (!best || total < *best) best = total;
  }
  return best;
}

void broker_claims(Check& c) {
  const Graph g = load_fixture("dataset.ttl");
  const auto offers = broker::providers_offering(g, "RandomForest");
  std::set<std::string> names;
  for (const auto& o : offers) names.insert(o.provider.name);
  c.expect(names == std::set<std::string>{"Alpha Analytics", "Beta Cloud ML"}, "both providers offer RandomForest");

  // Independent scan for services titled RandomForest.
  std::set<Term> services;
  for (const auto& t : g.match(std::nullopt, V("dc:title"), Term::literal("RandomForest")))
    for (const auto& link : g.match(std::nullopt, V("dmcc:hasFunction"), t.subject)) services.insert(link.subject);
  std::optional<Decimal> lowest;
  std::optional<Term> cheapest;
  for (const auto& s : services) {
    const auto cost = hourly_oracle(g, s, 100);
    if (cost && (!lowest || *cost < *lowest)) {
      lowest = cost;
      cheapest = s;
    }
  }
  c.expect(lowest.has_value(), "oracle prices some offer");

  pricing::UsageRequest usage;
  usage.quantities.push_back({Decimal::from_integer(100), "HRS"});
  try {
    const auto best = broker::best_offer(g, "RandomForest", usage);
    c.expect(best.quote.has_value(), "best offer is quoted");
    if (best.quote && lowest) {
      c.equal(best.quote->total.to_fixed(2), lowest->to_fixed(2), "best total");
      c.expect(best.quote->total == *lowest, "best total exact");
      c.expect(best.service == *cheapest, "best offer is the oracle's cheapest service");
    }
    c.note("best " + best.provider.name + " " + (best.quote ? best.quote->total.to_fixed(2) : "-") + " USD");
  } catch (const std::exception& e) {
    c.expect(false, std::string("best_offer threw: ") + e.what());
  }
}

// ---- AC6 --------------------------------------------------------------------

void pricing_properties(Check& c) {
  testing::Gen g(20261016);
  int quoted = 0, refused = 0;
  for (int i = 0; i < 500; ++i) {
    const auto plan = testing::random_plan(g, false);
    const auto usage = testing::random_usage(g, plan);
    const auto want = testing::oracle(plan, usage);
    const std::string tag = "case " + std::to_string(i);
    std::optional<pricing::CostBreakdown> got;
    try {
      got = pricing::quote(plan, usage);
    } catch (const pricing::PricingError& e) {
      c.expect(want.error, tag + " refused: " + e.what());
      ++refused;
      continue;
    }
    ++quoted;
    c.expect(!want.error, tag + " quoted but the oracle refuses");
    c.equal(got->total.scaled(), want.total, tag + " exact total (scaled)");
    Decimal sum;
    for (const auto& item : got->items) {
      sum += item.subtotal;
      c.expect(item.subtotal == item.billed_quantity * item.unit_price, tag + " line item arithmetic");
    }
    c.expect(sum == got->total, tag + " items sum to the total");
    c.expect(got->total >= Decimal(), tag + " non-negative");
    if (got->cap) c.expect(got->total <= *got->cap, tag + " within cap");
    if (!usage.quantities.empty()) {
      auto more = usage;
      auto& q = more.quantities[static_cast<std::size_t>(g.pick(static_cast<int>(more.quantities.size())))];
      q.amount += Decimal::from_scaled(1 + static_cast<std::int64_t>(g.rng() % 2'000'000));
      try {
        c.expect(pricing::quote(plan, more).total >= got->total, tag + " monotone");
      } catch (const pricing::PricingError& e) {
        c.expect(e.kind() == pricing::PricingError::Kind::kAllowanceExceeded, tag + " monotone: " + e.what());
      }
    }
  }

  testing::Gen fg(4242);
  int overflows = 0;
  for (int i = 0; i < 500; ++i) {
    const auto plan = testing::random_plan(fg, true);
    auto usage = testing::random_usage(fg, plan);
    std::map<std::string, Decimal> allowance;
    for (const auto& cp : plan.compounds)
      if ((!cp.instance || cp.instance->node == usage.instance) && (!cp.region || cp.region->code == *usage.region))
        allowance[cp.allowance->unit] += cp.allowance->amount;
    if (allowance.empty()) continue;
    // Push one covered unit past its allowance.
    const auto& [unit, limit] = *std::next(allowance.begin(), fg.pick(static_cast<int>(allowance.size())));
    usage.quantities.erase(std::remove_if(usage.quantities.begin(), usage.quantities.end(),
                                          [&](const model::Quantity& q) { return q.unit == unit; }),
                           usage.quantities.end());
    usage.quantities.push_back({limit + Decimal::from_scaled(1 + static_cast<std::int64_t>(fg.rng() % 1'000'000)), unit});
    ++overflows;
    try {
      const auto billed = pricing::quote(plan, usage);
      c.expect(false, "free plan billed " + billed.total.to_string() + " past its allowance, case " + std::to_string(i));
    } catch (const pricing::PricingError&) {
    }
  }
  c.expect(quoted > 200 && refused > 0, "both outcomes exercised");
  c.expect(overflows > 300, "overflow cases exercised");
  c.note(std::to_string(quoted) + " quoted, " + std::to_string(refused) + " refused, " + std::to_string(overflows) +
         " free-plan overflows");
}

// ---- AC7 --------------------------------------------------------------------

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  dmcc::cli::run(args, out, err);
  return out.str();
}

// A separate process, so nothing in memory can be shared between runs.
std::optional<std::string> run_process(const std::vector<std::string>& args) {
  std::string cmd = "'" DMCC_TOOL_PATH "'";
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

void determinism(Check& c) {
  int outputs = 0;
  for (const auto& f : all_fixtures()) {
    const auto path = fixture_path(f);
    const std::vector<std::vector<std::string>> commands{
        {"convert", path, "--to", "ntriples"},
        {"validate", path, "--json"},
        {"extract", path, "--json"},
    };
    for (const auto& args : commands) {
      const auto a = run_cli(args);
      const auto b = run_cli(args);
      c.expect(!a.empty() && a == b, f + ": " + args[0] + " differs between in-process runs");
      const auto p1 = run_process(args);
      const auto p2 = run_process(args);
      c.expect(p1 && p2 && *p1 == a && *p2 == a, f + ": " + args[0] + " differs between processes");
      ++outputs;
    }
    // Library paths too: a fresh parse each time.
    c.expect(rdf::serialize_ntriples(load_fixture(f)) == rdf::serialize_ntriples(load_fixture(f)), f + ": N-Triples");
  }
  c.note(std::to_string(outputs) + " outputs over " + std::to_string(all_fixtures().size()) + " fixtures");
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "listing reproduction", listings},
      {"AC2", "SLA compensation tables", sla_tables},
      {"AC3", "six-aspect validation", six_aspects},
      {"AC4", "query oracle equivalence", query_oracle},
      {"AC5", "broker reproduction", broker_claims},
      {"AC6", "pricing properties", pricing_properties},
      {"AC7", "determinism", determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    check.expect(secs < kTimeLimitSeconds, std::string("took ") + timing + ", limit 5s");
    const bool pass = check.failed() == 0;
    failed += !pass;
    std::cout << (pass ? "PASS " : "FAIL ") << cr.id << " " << cr.title << ": " << check.checks() - check.failed() << "/"
              << check.checks() << " checks, " << timing;
    if (!check.notes().empty()) std::cout << " (" << check.notes() << ")";
    std::cout << "\n";
    for (const auto& f : check.failures()) std::cout << "  - " << f << "\n";
  }
  return failed;
}
