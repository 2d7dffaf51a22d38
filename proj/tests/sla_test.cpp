#include <gtest/gtest.h>

#include <random>

#include "dmcc/model.hpp"
#include "dmcc/sla.hpp"
#include "test_support.hpp"

namespace dmcc::sla {
namespace {

using model::CompensationKind;
using rdf::Term;
using testing::load_fixture;

Decimal D(std::string_view s) { return *Decimal::parse(s); }

model::SlaAgreement table_sla() { return model::extract_sla(load_fixture("sla-table.ttl"), Term::blank("TableSLA")); }
model::SlaAgreement prose_sla() { return model::extract_sla(load_fixture("full.ttl"), Term::blank("MLServiceSLA")); }

CompensationResult mup(const model::SlaAgreement& sla, std::string_view v) {
  return compensation_for(sla, {"MUP", D(v), "percent"});
}

TEST(CompensationFor, TableAgreement) {
  const auto sla = table_sla();
  const auto low = mup(sla, "98.50");
  ASSERT_TRUE(low.compensation);
  EXPECT_EQ(low.compensation->kind, CompensationKind::kPercentOfBill);
  EXPECT_EQ(low.compensation->amount, D("25"));
  const auto high = mup(sla, "99.50");
  ASSERT_TRUE(high.compensation);
  EXPECT_EQ(high.compensation->amount, D("10"));
  const auto none = mup(sla, "100.00");
  EXPECT_FALSE(none.matched);
  EXPECT_FALSE(none.compensation);
}

TEST(CompensationFor, ProseAgreement) {
  const auto sla = prose_sla();
  const auto low = mup(sla, "98.00");
  ASSERT_TRUE(low.compensation);
  EXPECT_EQ(low.compensation->kind, CompensationKind::kServiceCredits);
  EXPECT_EQ(low.compensation->amount, D("30"));
  const auto edge = mup(sla, "99.00");
  ASSERT_TRUE(edge.compensation);
  EXPECT_EQ(edge.compensation->amount, D("10"));
  EXPECT_EQ(mup(sla, "99.98").compensation->amount, D("10"));
  EXPECT_FALSE(mup(sla, "99.995").matched);
}

TEST(CompensationFor, TopTierIsClosed) {
  EXPECT_EQ(mup(prose_sla(), "99.99").compensation->amount, D("10"));
  EXPECT_EQ(mup(table_sla(), "0").compensation->amount, D("25"));
}

TEST(CompensationFor, Errors) {
  const auto sla = table_sla();
  try {
    compensation_for(sla, {"RTT", D("1"), "percent"});
    FAIL();
  } catch (const SlaError& e) {
    EXPECT_EQ(e.kind(), SlaError::Kind::kUnknownTerm);
  }
  try {
    compensation_for(sla, {"MUP", D("1"), "credits"});
    FAIL();
  } catch (const SlaError& e) {
    EXPECT_EQ(e.kind(), SlaError::Kind::kUnitMismatch);
  }
  // The listing spelling normalizes, an empty unit takes the term's.
  EXPECT_TRUE(compensation_for(sla, {"MUP", D("50"), "Percentaje"}).matched);
  EXPECT_TRUE(compensation_for(sla, {"MUP", D("50"), ""}).matched);
}

TEST(CompensationAmount, Examples) {
  const CompensationResult pct{0, model::Compensation{CompensationKind::kPercentOfBill, D("25")}};
  EXPECT_EQ(compensation_amount(pct, D("200.00")), D("50.00"));
  EXPECT_EQ(compensation_amount(CompensationResult{}, D("200.00")), Decimal());
  const CompensationResult credits{1, model::Compensation{CompensationKind::kServiceCredits, D("10")}};
  EXPECT_EQ(compensation_amount(credits, D("200.00")), D("10"));
  EXPECT_EQ(compensation_amount(credits, D("0")), D("10"));
}

TEST(CompensationAmount, PercentAgainstIntegerOracle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t bill = static_cast<std::int64_t>(rng() % 100'000'000);  // scaled
    const std::int64_t pct = static_cast<std::int64_t>(rng() % 1'000'001);     // up to 100.0000
    const CompensationResult r{0, model::Compensation{CompensationKind::kPercentOfBill, Decimal::from_scaled(pct)}};
    // Exact product over 10^6, rounded half-even.
    const __int128 num = static_cast<__int128>(bill) * pct;
    const __int128 den = 1'000'000;
    __int128 q = num / den;
    const __int128 rem = num % den;
    if (rem * 2 > den || (rem * 2 == den && q % 2 != 0)) ++q;
    EXPECT_EQ(compensation_amount(r, Decimal::from_scaled(bill)).scaled(), static_cast<std::int64_t>(q));
  }
}

// Lower uptime never earns less compensation.
TEST(Properties, MonotoneOnFixtures) {
  for (const auto& sla : {table_sla(), prose_sla()}) {
    Decimal previous = Decimal::from_integer(1'000'000);
    for (std::int64_t v = 0; v <= 1'000'000; v += 25) {  // 0.0000 .. 100.0000
      const Decimal owed = compensation_amount(compensation_for(sla, {"MUP", Decimal::from_scaled(v), "percent"}),
                                               Decimal::from_integer(1000));
      EXPECT_LE(owed, previous) << Decimal::from_scaled(v).to_string();
      previous = owed;
    }
  }
}

TEST(Properties, SharedEndpointGoesUp) {
  for (const auto& sla : {table_sla(), prose_sla()}) {
    const auto& defs = sla.terms.at(0).definitions;
    for (std::size_t i = 0; i < defs.size(); ++i)
      for (std::size_t j = 0; j < defs.size(); ++j)
        if (defs[i].max == defs[j].min) {
          const auto r = compensation_for(sla, {"MUP", defs[i].max, "percent"});
          EXPECT_EQ(r.matched, j);
        }
  }
}

// Random tilings of [0, 100] with gaps: the matched range is the one the
// half-open rule picks, and at most one range contains any value.
TEST(Properties, ExclusivityOnRandomAgreements) {
  std::mt19937 rng(99);
  for (int round = 0; round < 300; ++round) {
    model::SlaTerm term;
    term.name = "MUP";
    std::int64_t cursor = static_cast<std::int64_t>(rng() % 50'000);
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n && cursor < 1'000'000; ++i) {
      const std::int64_t width = 1 + static_cast<std::int64_t>(rng() % 300'000);
      const std::int64_t top = std::min<std::int64_t>(cursor + width, 1'000'000);
      term.definitions.push_back({Decimal::from_scaled(cursor), Decimal::from_scaled(top), "percent"});
      term.compensations.push_back({CompensationKind::kPercentOfBill, Decimal::from_integer(n - i)});
      cursor = top + (rng() % 3 == 0 ? static_cast<std::int64_t>(rng() % 20'000) : 0);
    }
    std::shuffle(term.definitions.begin(), term.definitions.end(), rng);
    for (std::size_t i = 0; i < term.definitions.size(); ++i) term.compensations[i].amount = Decimal::from_integer(i);
    model::SlaAgreement sla;
    sla.terms.push_back(term);
    Decimal top_max;
    for (const auto& d : term.definitions) top_max = std::max(top_max, d.max);

    for (int k = 0; k < 50; ++k) {
      const Decimal v = Decimal::from_scaled(static_cast<std::int64_t>(rng() % 1'050'000));
      std::vector<std::size_t> half_open;
      for (std::size_t i = 0; i < term.definitions.size(); ++i)
        if (term.definitions[i].min <= v && v < term.definitions[i].max) half_open.push_back(i);
      ASSERT_LE(half_open.size(), 1u);
      const auto r = compensation_for(sla, {"MUP", v, "percent"});
      if (!half_open.empty()) {
        EXPECT_EQ(r.matched, half_open[0]);
        EXPECT_EQ(r.compensation->amount, Decimal::from_integer(static_cast<std::int64_t>(half_open[0])));
      } else if (v == top_max) {
        EXPECT_TRUE(r.matched);
      } else if (!r.matched) {
        EXPECT_FALSE(r.compensation);
      } else {
        // Only a closed top edge of a range with nothing above it.
        EXPECT_EQ(term.definitions[*r.matched].max, v);
      }
    }
  }
}

}  // namespace
}  // namespace dmcc::sla
