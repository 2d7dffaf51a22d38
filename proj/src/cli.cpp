#include "dmcc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "dmcc/broker.hpp"
#include "dmcc/model_json.hpp"
#include "dmcc/pricing.hpp"
#include "dmcc/query.hpp"
#include "dmcc/rdf/turtle.hpp"
#include "dmcc/sla.hpp"
#include "dmcc/validate.hpp"
#include "dmcc/vocab.hpp"

namespace dmcc::cli {
namespace {

using model::Json;
using rdf::Graph;
using rdf::Term;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return ss.str();
}

Graph parse_file(const std::string& path) {
  const auto text = read_file(path);
  try {
    return rdf::parse_turtle(text);
  } catch (const rdf::ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

// File stem made safe for a blank node label.
std::string label_stem(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  for (auto& c : stem)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') c = '_';
  if (stem.empty() || std::isdigit(static_cast<unsigned char>(stem[0]))) stem = "f" + stem;
  return stem;
}

// A single file keeps its labels; several files get one label prefix each.
Graph load(const std::vector<std::string>& files) {
  if (files.size() == 1) return parse_file(files[0]);
  Graph g;
  std::set<std::string> used;
  for (const auto& f : files) {
    std::string stem = label_stem(f);
    for (int i = 2; used.count(stem); ++i) stem = label_stem(f) + std::to_string(i);
    used.insert(stem);
    g.merge(rdf::with_blank_prefix(parse_file(f), stem + "_"));
  }
  return g;
}

Term node_arg(const Graph& g, const std::string& text, const std::string& what) {
  std::optional<Term> t;
  if (text.rfind("_:", 0) == 0) {
    t = Term::blank(text.substr(2));
  } else if (text.size() > 2 && text.front() == '<' && text.back() == '>') {
    t = Term::iri(text.substr(1, text.size() - 2));
  } else if (const auto colon = text.find(':'); colon != std::string::npos) {
    const auto ns = g.prefixes().find(text.substr(0, colon));
    if (ns != g.prefixes().end()) {
      t = Term::iri(ns->second + text.substr(colon + 1));
    } else {
      try {
        t = Term::iri(vocab::TermRegistry::instance().resolve(text));
      } catch (const vocab::VocabError& e) {
        throw UsageError(what + " " + text + ": " + e.what());
      }
    }
  } else {
    t = Term::blank(text);
  }
  if (!g.has_subject(*t)) throw UsageError(what + " " + text + " is not described in the input");
  return *t;
}

Decimal decimal_arg(const std::string& text, const std::string& what) {
  const auto d = Decimal::parse(text);
  if (!d) throw UsageError(what + " '" + text + "' is not a decimal number");
  return *d;
}

struct UsageArgs {
  std::string hours;
  std::vector<std::string> usage;  // AMOUNT:UNIT
  std::string instance;
  std::string region;

  void add_to(CLI::App* c, bool hours_required) {
    auto* h = c->add_option("--hours", hours, "Hours of use (unit HRS)");
    if (hours_required) h->required();
    c->add_option("--usage", usage, "Additional usage as AMOUNT:UNIT, e.g. 20:E34 (repeatable)");
    c->add_option("--instance", instance, "Instance node the usage runs on");
    c->add_option("--region", region, "Region code, e.g. us-east-1");
  }

  pricing::UsageRequest build(const Graph& g) const {
    pricing::UsageRequest u;
    if (!hours.empty()) u.quantities.push_back(model::Quantity{decimal_arg(hours, "--hours"), "HRS"});
    for (const auto& q : usage) {
      const auto colon = q.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == q.size())
        throw UsageError("--usage '" + q + "' is not AMOUNT:UNIT");
      u.quantities.push_back(model::Quantity{decimal_arg(q.substr(0, colon), "--usage"), q.substr(colon + 1)});
    }
    if (!instance.empty()) u.instance = node_arg(g, instance, "instance");
    if (!region.empty()) u.region = region;
    if (u.quantities.empty()) throw UsageError("no usage given; pass --hours or --usage");
    return u;
  }
};

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Left-aligned columns separated by two spaces.
void write_table(std::ostream& out, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
}

std::string display(const Term& t, const Graph& g) { return rdf::to_turtle_term(t, g.prefixes()); }

// ---- commands ---------------------------------------------------------------

int do_convert(const std::vector<std::string>& files, const std::string& to, const std::string& output, std::ostream& out) {
  const Graph g = load(files);
  const std::string text = to == "ntriples" ? rdf::serialize_ntriples(g) : rdf::serialize_turtle(g);
  if (output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw IoError("cannot write " + output);
  f << text;
  f.close();
  if (!f) throw IoError("error writing " + output);
  return kOk;
}

int do_validate(const std::vector<std::string>& files, bool strict, bool json, std::ostream& out) {
  const Graph g = load(files);
  const auto report = strict ? validate::validate_strict(g) : validate::validate(g);
  if (json) {
    write_json(out, validate::to_json(report));
  } else {
    out << validate::to_text(report);
  }
  return report.errors() > 0 ? kFindings : kOk;
}

void describe_provider(const model::ServiceProvider& p, const Graph& g, std::ostream& out) {
  out << "provider " << display(*p.node, g) << "\n";
  out << "  name: " << p.name << "\n";
  out << "  legal name: " << p.legal_name << "\n";
  if (p.naics) out << "  naics: " << *p.naics << "\n";
  if (p.url) out << "  url: " << *p.url << "\n";
  for (const auto& s : p.services) {
    out << "  service " << (s.node ? display(*s.node, g) : "?") << (s.label ? "  " + *s.label : "") << "\n";
    for (const auto& f : s.functions) out << "    function: " << f.name << "\n";
    for (const auto& plan : s.pricing) out << "    plan: " << plan.name << (plan.currency.empty() ? "" : " (" + plan.currency + ")") << "\n";
    if (s.sla)
      for (const auto& t : s.sla->terms) out << "    sla term: " << t.name << " (ranges: " << t.definitions.size() << ")\n";
  }
}

int do_extract(const std::vector<std::string>& files, const std::string& provider, bool json, std::ostream& out,
               std::ostream& err) {
  const Graph g = load(files);
  std::vector<Term> nodes;
  if (provider.empty()) {
    nodes = model::list_providers(g);
  } else {
    nodes.push_back(node_arg(g, provider, "provider"));
  }
  std::vector<model::ServiceProvider> found;
  for (const auto& n : nodes) {
    std::vector<model::Issue> issues;
    found.push_back(model::extract_provider(g, n, &issues));
    for (const auto& i : issues) err << "warning: " << i.node.to_ntriples() << " " << i.where << ": " << i.message << "\n";
  }
  if (json) {
    if (!provider.empty()) {
      write_json(out, model::to_json(found.front()));
    } else {
      Json arr = Json::array();
      for (const auto& p : found) arr.push_back(model::to_json(p));
      write_json(out, arr);
    }
    return kOk;
  }
  for (const auto& p : found) describe_provider(p, g, out);
  return kOk;
}

int do_query(const std::string& query_file, const std::vector<std::string>& files, bool json, std::ostream& out,
             std::ostream& err) {
  const auto text = read_file(query_file);
  query::SelectQuery q;
  try {
    q = query::parse_query(text);
  } catch (const query::QueryError& e) {
    throw UsageError(query_file + ": " + e.what());
  }
  const Graph g = load(files);
  const auto rs = query::evaluate(g, q);
  if (rs.type_errors > 0) err << "warning: " << rs.type_errors << " filter evaluation(s) failed on operand types\n";
  if (json) {
    Json j;
    j["columns"] = rs.columns;
    j["rows"] = Json::array();
    for (const auto& row : rs.rows) {
      Json r;
      for (std::size_t i = 0; i < row.size(); ++i) r[rs.columns[i]] = row[i].to_ntriples();
      j["rows"].push_back(r);
    }
    j["typeErrors"] = rs.type_errors;
    write_json(out, j);
    return kOk;
  }
  std::vector<std::string> head;
  for (const auto& c : rs.columns) head.push_back("?" + c);
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : rs.rows) {
    std::vector<std::string> cells;
    for (const auto& t : row) cells.push_back(display(t, g));
    rows.push_back(std::move(cells));
  }
  write_table(out, head, rows);
  out << rs.rows.size() << " row(s)\n";
  return kOk;
}

int do_sla_comp(const std::vector<std::string>& files, const std::string& service, const std::string& term,
                const std::string& value, const std::string& unit, const std::string& bill, bool json, std::ostream& out) {
  const Graph g = load(files);
  const Term node = node_arg(g, service, "service");
  std::vector<model::Issue> issues;
  // The node may also name the agreement itself.
  std::optional<model::SlaAgreement> agreement;
  if (g.contains(rdf::Triple(node, Term::iri(std::string(rdf::kRdfType)), vocab::term("ccsla:SLA")))) {
    agreement = model::extract_sla(g, node, &issues);
  } else {
    agreement = model::extract_service(g, node, &issues).sla;
  }
  if (!agreement) throw UsageError("service " + service + " has no SLA");
  const auto result = sla::compensation_for(*agreement, sla::Observation{term, decimal_arg(value, "--value"), unit});
  const auto* t = agreement->find_term(term);
  std::optional<Decimal> amount;
  if (!bill.empty()) amount = sla::compensation_amount(result, decimal_arg(bill, "--bill"));

  if (json) {
    Json j;
    j["service"] = model::node_json(node);
    j["term"] = t->name;
    j["value"] = decimal_arg(value, "--value").to_string();
    j["matched"] = result.matched ? Json(*result.matched) : Json(nullptr);
    j["interval"] = result.matched ? model::to_json(t->definitions[*result.matched]) : Json(nullptr);
    j["compensation"] = result.compensation ? model::to_json(*result.compensation) : Json(nullptr);
    if (amount) {
      j["bill"] = decimal_arg(bill, "--bill").to_string();
      j["amount"] = amount->to_fixed(2);
    }
    write_json(out, j);
    return kOk;
  }
  out << t->name << " " << decimal_arg(value, "--value").to_string() << ": ";
  if (!result.compensation) {
    out << "no compensation\n";
  } else {
    const auto& iv = t->definitions[*result.matched];
    out << "range [" << iv.min.to_string() << ", " << iv.max.to_string() << ") " << iv.unit << " -> "
        << result.compensation->amount.to_string() << " "
        << (result.compensation->kind == model::CompensationKind::kPercentOfBill ? "percent of bill" : "service credits")
        << "\n";
  }
  if (amount) out << "amount: " << amount->to_fixed(2) << "\n";
  return kOk;
}

void write_cost(const pricing::CostBreakdown& c, const Graph& g, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& i : c.items)
    rows.push_back({display(i.compound, g), i.unit, i.billed_quantity.to_string(), i.unit_price.to_string(),
                    i.subtotal.to_fixed(2)});
  write_table(out, {"compound", "unit", "billed", "price", "subtotal"}, rows);
  for (const auto& a : c.allowance_applied) out << "allowance used: " << a.amount.to_string() << " " << a.unit << "\n";
  if (c.cap) out << "cap: " << c.cap->to_fixed(2) << "\n";
  out << "total: " << c.total.to_fixed(2) << (c.currency.empty() ? "" : " " + c.currency) << "\n";
}

int do_quote(const std::vector<std::string>& files, const std::string& plan, const UsageArgs& ua, bool json,
             std::ostream& out) {
  const Graph g = load(files);
  const Term node = node_arg(g, plan, "plan");
  std::vector<model::Issue> issues;
  const auto p = model::extract_pricing(g, node, &issues);
  const auto usage = ua.build(g);
  const auto cost = pricing::quote(p, usage);
  if (json) {
    Json j;
    j["plan"] = Json{{"node", model::node_json(node)}, {"name", p.name}};
    j["usage"] = pricing::to_json(usage);
    j["cost"] = pricing::to_json(cost);
    write_json(out, j);
    return kOk;
  }
  out << "plan " << display(node, g) << "  " << p.name << "\n";
  write_cost(cost, g, out);
  return kOk;
}

int do_broker(const std::vector<std::string>& files, const std::string& function, const UsageArgs& ua,
              const std::vector<std::string>& alias_args, bool json, std::ostream& out) {
  const Graph g = load(files);
  broker::AliasMap aliases;
  for (const auto& a : alias_args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--alias '" + a + "' is not NAME=OTHER[,OTHER...]");
    auto& list = aliases[a.substr(0, eq)];
    std::stringstream ss(a.substr(eq + 1));
    for (std::string part; std::getline(ss, part, ',');)
      if (!part.empty()) list.push_back(part);
  }
  const auto usage = ua.build(g);
  const auto offers = broker::compare(g, function, usage, aliases);
  if (json) {
    Json j;
    j["function"] = function;
    j["usage"] = pricing::to_json(usage);
    j["offers"] = Json::array();
    for (const auto& o : offers) j["offers"].push_back(broker::to_json(o));
    j["best"] = !offers.empty() && offers.front().quote ? Json(0) : Json(nullptr);
    write_json(out, j);
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < offers.size(); ++i) {
    const auto& o = offers[i];
    rows.push_back({std::to_string(i + 1), o.provider.name, display(o.service, g), o.plan ? o.plan->name : "-",
                    o.quote ? o.quote->total.to_fixed(2) + (o.quote->currency.empty() ? "" : " " + o.quote->currency)
                            : "error: " + o.error.value_or("")});
  }
  write_table(out, {"#", "provider", "service", "plan", "total"}, rows);
  if (offers.empty()) out << "no provider offers " << function << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Describe, validate, query and price cloud data-mining services", "dmcc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dmcc 0.1.0 (JSON shape " + std::to_string(model::kJsonShapeVersion) + ")");

  std::vector<std::string> files;
  bool json = false;
  bool strict = false;

  auto* convert = app.add_subcommand("convert", "Parse Turtle and write it as Turtle or N-Triples");
  std::string to = "turtle", output;
  convert->add_option("files", files, "Turtle input files")->required();
  convert->add_option("--to", to, "Output format")->check(CLI::IsMember({"turtle", "ntriples"}));
  convert->add_option("-o,--output", output, "Write to this file instead of standard output");

  auto* val = app.add_subcommand("validate", "Check service descriptions against the schema rules");
  val->add_option("files", files, "Turtle input files")->required();
  val->add_flag("--strict", strict, "Also warn about terms the vocabulary does not know");
  val->add_flag("--json", json, "JSON output");

  auto* extract = app.add_subcommand("extract", "Print the service model of one or all providers");
  std::string provider;
  extract->add_option("files", files, "Turtle input files")->required();
  extract->add_option("--provider", provider, "Provider node: _:label, prefix:local or <iri>");
  extract->add_flag("--json", json, "JSON output");

  auto* query_cmd = app.add_subcommand("query", "Run a SELECT query over the input");
  std::string query_file;
  query_cmd->add_option("--file", query_file, "Query file")->required();
  query_cmd->add_option("files", files, "Turtle input files")->required();
  query_cmd->add_flag("--json", json, "JSON output");

  auto* sla_cmd = app.add_subcommand("sla-comp", "Compensation owed for an observed SLA value");
  std::string service, term, value, unit, bill;
  sla_cmd->add_option("files", files, "Turtle input files")->required();
  sla_cmd->add_option("--service", service, "Service node, or the agreement node itself")->required();
  sla_cmd->add_option("--term", term, "SLA term name, e.g. MUP")->required();
  sla_cmd->add_option("--value", value, "Observed value")->required();
  sla_cmd->add_option("--unit", unit, "Unit of the value (default: the term's unit)");
  sla_cmd->add_option("--bill", bill, "Billed amount, to turn a percentage into money");
  sla_cmd->add_flag("--json", json, "JSON output");

  auto* quote_cmd = app.add_subcommand("quote", "Price a usage request against one plan");
  std::string plan;
  UsageArgs quote_usage;
  quote_cmd->add_option("files", files, "Turtle input files")->required();
  quote_cmd->add_option("--plan", plan, "Pricing plan node")->required();
  quote_usage.add_to(quote_cmd, false);
  quote_cmd->add_flag("--json", json, "JSON output");

  auto* broker_cmd = app.add_subcommand("broker", "Compare every provider offering a function");
  std::string function;
  UsageArgs broker_usage;
  std::vector<std::string> aliases;
  broker_cmd->add_option("files", files, "Turtle input files")->required();
  broker_cmd->add_option("--function", function, "Function title, e.g. RandomForest")->required();
  broker_usage.add_to(broker_cmd, false);
  broker_cmd->add_option("--alias", aliases, "NAME=OTHER[,OTHER...]: names that mean the same function (repeatable)");
  broker_cmd->add_flag("--json", json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (convert->parsed()) return do_convert(files, to, output, out);
    if (val->parsed()) return do_validate(files, strict, json, out);
    if (extract->parsed()) return do_extract(files, provider, json, out, err);
    if (query_cmd->parsed()) return do_query(query_file, files, json, out, err);
    if (sla_cmd->parsed()) return do_sla_comp(files, service, term, value, unit, bill, json, out);
    if (quote_cmd->parsed()) return do_quote(files, plan, quote_usage, json, out);
    if (broker_cmd->parsed()) return do_broker(files, function, broker_usage, aliases, json, out);
  } catch (const IoError& e) {
    err << "dmcc: " << e.what() << "\n";
    return kIo;
  } catch (const UsageError& e) {
    err << "dmcc: " << e.what() << "\n";
    return kUsage;
  } catch (const pricing::PricingError& e) {
    err << "dmcc: " << pricing::to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const sla::SlaError& e) {
    err << "dmcc: " << sla::to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const model::ModelError& e) {
    err << "dmcc: " << model::to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "dmcc: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace dmcc::cli
