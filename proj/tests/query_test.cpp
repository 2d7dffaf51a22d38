#include "dmcc/query.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dmcc/vocab.hpp"
#include "query_oracle.hpp"
#include "test_support.hpp"

namespace dmcc::query {
namespace {

using testing::load_fixture;
using testing::oracle_rows;
using testing::oracle_templates;
using testing::random_query_graph;
using testing::rendered_rows;

QueryError::Kind error_kind(const std::string& text) {
  try {
    parse_query(text);
  } catch (const QueryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return QueryError::Kind::kInvalidQuery;
}

std::vector<std::string> column(const ResultSet& rs, std::size_t i = 0) {
  std::vector<std::string> out;
  for (const auto& r : rs.rows) out.push_back(r.at(i).to_ntriples());
  return out;
}

TEST(ParseQuery, SinglePattern) {
  const auto q = parse_query("SELECT ?s WHERE { ?s a dmcc:MLService }");
  ASSERT_EQ(q.patterns.size(), 1u);
  ASSERT_EQ(q.projected.size(), 1u);
  EXPECT_EQ(q.projected[0].name, "s");
  EXPECT_EQ(q.patterns[0].subject, Slot(Variable{"s"}));
  EXPECT_EQ(q.patterns[0].predicate, Slot(Term::iri(std::string(rdf::kRdfType))));
  EXPECT_EQ(q.patterns[0].object, Slot(vocab::term("dmcc:MLService")));
  EXPECT_FALSE(q.limit);
  EXPECT_FALSE(q.order_by);
}

TEST(ParseQuery, NumericFilter) {
  const auto q = parse_query("SELECT ?plan WHERE { ?plan ccpricing:hasPrice ?price . FILTER(?price <= 0.10) }");
  ASSERT_EQ(q.filters.size(), 1u);
  EXPECT_EQ(q.filters[0].op, FilterOp::kLe);
  EXPECT_EQ(q.filters[0].left.name, "price");
  EXPECT_EQ(q.filters[0].right, Slot(Term(rdf::Literal::decimal("0.10"))));
}

TEST(ParseQuery, OptionalIsRejected) {
  try {
    parse_query("SELECT ?s WHERE { ?s a dmcc:MLService . OPTIONAL { ?s rdfs:label ?l } }");
    FAIL();
  } catch (const QueryError& e) {
    EXPECT_EQ(e.kind(), QueryError::Kind::kUnsupportedKeyword);
    EXPECT_NE(std::string(e.what()).find("OPTIONAL"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 41u);
  }
}

TEST(ParseQuery, EveryUnsupportedKeywordIsRejected) {
  for (auto kw : unsupported_keywords()) {
    const std::string word(kw);
    EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o } " + word), QueryError::Kind::kUnsupportedKeyword) << word;
    EXPECT_EQ(error_kind("SELECT ?s WHERE { " + word + " ?s ?p ?o }"), QueryError::Kind::kUnsupportedKeyword) << word;
  }
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o } group by ?s"), QueryError::Kind::kUnsupportedKeyword);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o } UNION { ?s ?p ?o }"), QueryError::Kind::kUnsupportedKeyword);
  EXPECT_EQ(error_kind("SELECT (COUNT(?s) AS ?n) WHERE { ?s ?p ?o }"), QueryError::Kind::kUnsupportedKeyword);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s dmcc:hasMLService/dmcc:hasFunction ?f }"), QueryError::Kind::kUnsupportedKeyword);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o FILTER(?o > 1 && ?o < 3) }"), QueryError::Kind::kUnsupportedKeyword);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o FILTER(regex(?o, \"x\")) }"), QueryError::Kind::kUnsupportedKeyword);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o } LIMIT 5 OFFSET 2"), QueryError::Kind::kUnsupportedKeyword);
  EXPECT_EQ(error_kind("ASK { ?s ?p ?o }"), QueryError::Kind::kUnsupportedKeyword);
}

TEST(ParseQuery, SyntaxErrorsCarryPosition) {
  try {
    parse_query("SELECT ?s\nWHERE { ?s a }");
    FAIL();
  } catch (const QueryError& e) {
    EXPECT_EQ(e.kind(), QueryError::Kind::kSyntax);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 14u);
    EXPECT_EQ(std::string(e.what()).rfind("line 2, column 14:", 0), 0u) << e.what();
  }
  EXPECT_EQ(error_kind("SELECT WHERE { ?s ?p ?o }"), QueryError::Kind::kSyntax);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o "), QueryError::Kind::kSyntax);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p \"open }"), QueryError::Kind::kSyntax);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s \"lit\" ?o }"), QueryError::Kind::kSyntax);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o } LIMIT many"), QueryError::Kind::kSyntax);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o } trailing"), QueryError::Kind::kSyntax);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o . FILTER(?o ~ 3) }"), QueryError::Kind::kSyntax);
}

TEST(ParseQuery, UnknownPrefix) {
  try {
    parse_query("SELECT ?s WHERE { ?s nope:thing ?o }");
    FAIL();
  } catch (const QueryError& e) {
    EXPECT_EQ(e.kind(), QueryError::Kind::kUnknownPrefix);
    EXPECT_EQ(e.column(), 22u);
  }
}

TEST(ParseQuery, InvalidQueries) {
  EXPECT_EQ(error_kind("SELECT ?x WHERE { ?s ?p ?o }"), QueryError::Kind::kInvalidQuery);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o FILTER(?z = 1) }"), QueryError::Kind::kInvalidQuery);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o FILTER(?o = ?z) }"), QueryError::Kind::kInvalidQuery);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o } ORDER BY ?z"), QueryError::Kind::kInvalidQuery);
  EXPECT_EQ(error_kind("SELECT ?s WHERE { ?s ?p ?o } LIMIT 0"), QueryError::Kind::kInvalidQuery);
  EXPECT_EQ(error_kind("SELECT ?s ?s WHERE { ?s ?p ?o }"), QueryError::Kind::kInvalidQuery);
  EXPECT_EQ(error_kind("SELECT * WHERE { }"), QueryError::Kind::kInvalidQuery);
}

TEST(ParseQuery, DeclaredPrefixesWinOverTheRegistry) {
  const auto q = parse_query("PREFIX dmcc: <http://other.example/#>\nSELECT ?s WHERE { ?s a dmcc:MLService }");
  EXPECT_EQ(q.patterns[0].object, Slot(Term::iri("http://other.example/#MLService")));
}

TEST(ParseQuery, Abbreviations) {
  const auto q = parse_query(
      "# comment\n"
      "select distinct $s where {\n"
      "  ?s a dmcc:MLService ; rdfs:label ?l , \"x\"@en ; dc:title 'y'^^xsd:string .\n"
      "  ?s <http://example.org/p> -3, 2.5, 1e3, true\n"
      "} order by desc(?l) limit 7");
  EXPECT_TRUE(q.distinct);
  ASSERT_EQ(q.patterns.size(), 8u);
  EXPECT_EQ(q.patterns[2].object, Slot(Term(rdf::Literal::lang_string("x", "en"))));
  EXPECT_EQ(q.patterns[3].object, Slot(Term::literal("y")));
  EXPECT_EQ(q.patterns[4].object, Slot(Term(rdf::Literal("-3", std::string(rdf::kXsdInteger)))));
  EXPECT_EQ(q.patterns[5].object, Slot(Term(rdf::Literal::decimal("2.5"))));
  EXPECT_EQ(q.patterns[6].object, Slot(Term(rdf::Literal("1e3", std::string(rdf::kXsdDouble)))));
  EXPECT_EQ(q.patterns[7].object, Slot(Term(rdf::Literal::boolean(true))));
  ASSERT_TRUE(q.order_by);
  EXPECT_EQ(q.order_by->var.name, "l");
  EXPECT_EQ(q.order_by->direction, Direction::kDesc);
  EXPECT_EQ(q.limit, 7u);
}

TEST(ParseQuery, StarSkipsBlankNodeVariables) {
  const auto q = parse_query("SELECT * WHERE { ?s dmcc:hasFunction _:f . _:f dc:title ?t }");
  ASSERT_EQ(q.projected.size(), 2u);
  EXPECT_EQ(q.projected[0].name, "s");
  EXPECT_EQ(q.projected[1].name, "t");
  EXPECT_EQ(error_kind("SELECT * WHERE { _:a <http://example.org/p> _:b }"), QueryError::Kind::kInvalidQuery);
}

TEST(ParseQuery, LessThanIsNotAnIri) {
  const auto q = parse_query("SELECT ?s WHERE { ?s ?p ?o FILTER(?o <3) }");
  ASSERT_EQ(q.filters.size(), 1u);
  EXPECT_EQ(q.filters[0].op, FilterOp::kLt);
}

TEST(Evaluate, ServicesInTheAssembledFixture) {
  const auto g = load_fixture("full.ttl");
  const auto rs = evaluate(g, parse_query("SELECT ?s WHERE { ?s a dmcc:MLService }"));
  EXPECT_EQ(rs.columns, std::vector<std::string>{"s"});
  EXPECT_EQ(column(rs), (std::vector<std::string>{"_:MLServiceDicitsKMeans", "_:MLServiceDicitsRF"}));
}

TEST(Evaluate, EmptyGraph) {
  for (const auto& t : oracle_templates()) EXPECT_TRUE(evaluate(rdf::Graph{}, parse_query(t)).rows.empty());
}

TEST(Evaluate, ProvidersOfferingRandomForest) {
  const auto g = load_fixture("dataset.ttl");
  const auto q = parse_query(
      "SELECT DISTINCT ?p WHERE { ?p dmcc:hasMLService ?s . ?s dmcc:hasFunction ?f . ?f dc:title \"RandomForest\" }");
  const auto rs = evaluate(g, q);
  EXPECT_EQ(column(rs), (std::vector<std::string>{"_:AlphaProvider", "_:BetaProvider"}));
  EXPECT_EQ(rendered_rows(rs), oracle_rows(g, q));
}

TEST(Evaluate, NumericComparisonAcrossIntegerAndDecimal) {
  rdf::Graph g;
  const auto p = Term::iri("http://example.org/v");
  g.insert(Term::blank("a"), p, Term(rdf::Literal("3", std::string(rdf::kXsdInteger))));
  g.insert(Term::blank("b"), p, Term(rdf::Literal::decimal("3.00")));
  g.insert(Term::blank("c"), p, Term(rdf::Literal::decimal("2.999999999999999999999")));
  g.insert(Term::blank("d"), p, Term::literal("3"));
  auto run = [&](const std::string& f) {
    return column(evaluate(g, parse_query("SELECT ?s WHERE { ?s <http://example.org/v> ?v FILTER(" + f + ") }")));
  };
  EXPECT_EQ(run("?v = 3"), (std::vector<std::string>{"_:a", "_:b"}));
  EXPECT_EQ(run("?v >= 3.0"), (std::vector<std::string>{"_:a", "_:b"}));
  EXPECT_EQ(run("?v < 3"), (std::vector<std::string>{"_:c"}));
  EXPECT_EQ(run("?v != 3"), (std::vector<std::string>{"_:c", "_:d"}));
}

TEST(Evaluate, TypeErrorsAreNonMatchesAndCounted) {
  rdf::Graph g;
  const auto p = Term::iri("http://example.org/v");
  g.insert(Term::blank("a"), p, Term(rdf::Literal("3", std::string(rdf::kXsdInteger))));
  g.insert(Term::blank("b"), p, Term::iri("http://example.org/thing"));
  g.insert(Term::blank("c"), p, Term(rdf::Literal::boolean(false)));
  const auto rs = evaluate(g, parse_query("SELECT ?s WHERE { ?s <http://example.org/v> ?v FILTER(?v > 1) }"));
  EXPECT_EQ(column(rs), std::vector<std::string>{"_:a"});
  EXPECT_EQ(rs.type_errors, 2u);
}

TEST(Evaluate, OrderByNumericValueThenRendering) {
  rdf::Graph g;
  const auto p = Term::iri("http://example.org/v");
  g.insert(Term::blank("a"), p, Term(rdf::Literal("10", std::string(rdf::kXsdInteger))));
  g.insert(Term::blank("b"), p, Term(rdf::Literal::decimal("9.5")));
  g.insert(Term::blank("c"), p, Term(rdf::Literal("10", std::string(rdf::kXsdInteger))));
  g.insert(Term::blank("d"), p, Term::iri("http://example.org/x"));
  const std::string base = "SELECT ?s WHERE { ?s <http://example.org/v> ?v } ORDER BY ";
  EXPECT_EQ(column(evaluate(g, parse_query(base + "?v"))), (std::vector<std::string>{"_:d", "_:b", "_:a", "_:c"}));
  EXPECT_EQ(column(evaluate(g, parse_query(base + "DESC(?v)"))), (std::vector<std::string>{"_:a", "_:c", "_:b", "_:d"}));
  EXPECT_EQ(column(evaluate(g, parse_query(base + "DESC(?v) LIMIT 3"))), (std::vector<std::string>{"_:a", "_:c", "_:b"}));
}

TEST(Evaluate, RepeatedVariableInOnePattern) {
  rdf::Graph g;
  const auto p = Term::iri("http://example.org/p");
  g.insert(Term::blank("a"), p, Term::blank("a"));
  g.insert(Term::blank("a"), p, Term::blank("b"));
  const auto rs = evaluate(g, parse_query("SELECT ?x WHERE { ?x <http://example.org/p> ?x }"));
  EXPECT_EQ(column(rs), std::vector<std::string>{"_:a"});
}

TEST(Evaluate, BagSemanticsWithoutDistinct) {
  const auto g = load_fixture("dataset.ttl");
  const std::string body = " ?p WHERE { ?p dmcc:hasMLService ?s }";
  EXPECT_EQ(evaluate(g, parse_query("SELECT" + body)).rows.size(), 4u);
  EXPECT_EQ(evaluate(g, parse_query("SELECT DISTINCT" + body)).rows.size(), 2u);
}

TEST(Evaluate, AliasSpellingsAreDistinctPredicates) {
  const auto g = load_fixture("full.ttl");
  const auto canonical = evaluate(g, parse_query("SELECT DISTINCT ?a WHERE { ?a ccsla:containsTerm ?t }"));
  const auto alias = evaluate(g, parse_query("SELECT DISTINCT ?a WHERE { ?a <" +
                                             vocab::TermRegistry::instance().spellings(vocab::term("ccsla:containsTerm").text()).back() +
                                             "> ?t }"));
  EXPECT_EQ(column(canonical), std::vector<std::string>{"_:KMeansSLA"});
  EXPECT_EQ(column(alias), std::vector<std::string>{"_:MLServiceSLA"});
}

// Oracle equivalence, row for row, including multiplicities.
TEST(QueryProperty, MatchesBruteForceOracle) {
  std::mt19937 rng(20240611);
  std::size_t nonempty = 0;
  for (int graph = 0; graph < 25; ++graph) {
    const auto g = random_query_graph(rng, 200);
    for (const auto& text : oracle_templates()) {
      const auto q = parse_query(text);
      const auto rs = evaluate(g, q);
      auto got = rendered_rows(rs);
      if (!q.order_by) EXPECT_TRUE(std::is_sorted(got.begin(), got.end())) << text;
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, oracle_rows(g, q)) << "graph " << graph << "\n" << text;
      nonempty += !got.empty();
    }
  }
  EXPECT_GT(nonempty, 150u);
}

TEST(QueryProperty, LimitReturnsPrefix) {
  std::mt19937 rng(7);
  for (int graph = 0; graph < 15; ++graph) {
    const auto g = random_query_graph(rng, 120);
    for (const auto& text : oracle_templates()) {
      const auto full = evaluate(g, parse_query(text));
      for (std::size_t n : {1u, 2u, 5u, 40u}) {
        auto q = parse_query(text);
        if (q.limit) continue;
        q.limit = n;
        const auto limited = evaluate(g, q);
        ASSERT_EQ(limited.rows.size(), std::min(n, full.rows.size()));
        EXPECT_TRUE(std::equal(limited.rows.begin(), limited.rows.end(), full.rows.begin())) << text;
      }
    }
  }
}

TEST(QueryProperty, AddingAPatternNeverEnlargesTheResult) {
  std::mt19937 rng(11);
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"SELECT ?s ?o WHERE { ?s q:p0 ?o }", "?o q:p1 ?z"},
      {"SELECT ?s WHERE { ?s ?p ?o }", "?s a q:C0"},
      {"SELECT ?s ?o WHERE { ?s q:p1 ?o FILTER(?o > 0) }", "?s q:p2 ?o"},
      {"SELECT DISTINCT ?s WHERE { ?s q:p2 ?v }", "?s q:p3 ?v"},
  };
  for (int graph = 0; graph < 20; ++graph) {
    const auto g = random_query_graph(rng, 150);
    for (const auto& [base, extra] : cases) {
      const std::string pre = "PREFIX q: <http://example.org/q#>\n";
      auto wider = rendered_rows(evaluate(g, parse_query(pre + base)));
      std::string narrow_text = pre + base;
      narrow_text.insert(narrow_text.find('{') + 1, " " + extra + " .");
      auto narrower = rendered_rows(evaluate(g, parse_query(narrow_text)));
      std::sort(wider.begin(), wider.end());
      std::sort(narrower.begin(), narrower.end());
      const std::set<testing::OracleRow> wide_set(wider.begin(), wider.end());
      for (const auto& r : narrower) EXPECT_TRUE(wide_set.count(r)) << narrow_text;
      const std::set<testing::OracleRow> narrow_set(narrower.begin(), narrower.end());
      EXPECT_LE(narrow_set.size(), wide_set.size());
    }
  }
}

// Filtering after the join must give what the evaluator gives with filters
// checked as soon as their variables are bound.
TEST(QueryProperty, FilterPlacementIsInvisible) {
  std::mt19937 rng(13);
  for (int graph = 0; graph < 20; ++graph) {
    const auto g = random_query_graph(rng, 150);
    for (const auto& text : oracle_templates()) {
      auto q = parse_query(text);
      if (q.filters.empty()) continue;
      auto all = q;
      all.projected = pattern_variables(q);
      all.distinct = false;
      const auto filtered = evaluate(g, all);
      auto unfiltered_q = all;
      unfiltered_q.filters.clear();
      const auto unfiltered = evaluate(g, unfiltered_q);
      std::vector<std::vector<Term>> post;
      for (const auto& row : unfiltered.rows) {
        bool keep = true;
        for (const auto& f : q.filters) {
          const auto li = std::find(all.projected.begin(), all.projected.end(), f.left) - all.projected.begin();
          Term right = std::holds_alternative<Term>(f.right)
                           ? std::get<Term>(f.right)
                           : row[std::find(all.projected.begin(), all.projected.end(), std::get<Variable>(f.right)) -
                                 all.projected.begin()];
          keep = keep && apply_filter(f.op, row[li], right).value_or(false);
        }
        if (keep) post.push_back(row);
      }
      EXPECT_EQ(post, filtered.rows) << text;
    }
  }
}

TEST(QueryProperty, RowsAreDeterministic) {
  std::mt19937 rng(17);
  const auto g = random_query_graph(rng, 200);
  for (const auto& text : oracle_templates()) {
    const auto q = parse_query(text);
    EXPECT_EQ(evaluate(g, q), evaluate(g, q));
  }
}

}  // namespace
}  // namespace dmcc::query
