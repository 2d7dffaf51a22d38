#include <algorithm>
#include <map>
#include <vector>

#include "dmcc/rdf/turtle.hpp"

namespace dmcc::rdf {
namespace {

bool is_alnum(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

// Conservative PN_LOCAL check: only names that need no escaping.
bool plain_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (!(is_alnum(local.front()) || local.front() == '_')) return false;
  if (local.back() == '.') return false;
  return std::all_of(local.begin(), local.end(), [](char c) { return is_alnum(c) || c == '_' || c == '-' || c == '.'; });
}

bool plain_blank_label(std::string_view label) {
  return !label.empty() && plain_local_name(label) && (is_alnum(label.front()) || label.front() == '_');
}

std::string hex_label(std::string_view label) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "x";
  for (unsigned char c : label) {
    out += kHex[c >> 4];
    out += kHex[c & 15];
  }
  return out;
}

bool matches_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool matches_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  const auto dot = s.find('.');
  if (dot == std::string_view::npos || dot + 1 == s.size()) return false;
  auto digits = [](std::string_view d) {
    return std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  return digits(s.substr(0, dot)) && digits(s.substr(dot + 1));
}

std::string compact_iri(const std::string& iri, const PrefixMap& prefixes) {
  std::string best;
  std::size_t best_len = 0;
  for (const auto& [prefix, ns] : prefixes) {
    if (ns.size() <= best_len || iri.compare(0, ns.size(), ns) != 0) continue;
    const std::string_view local = std::string_view(iri).substr(ns.size());
    if (!plain_local_name(local)) continue;
    best = prefix + ":" + std::string(local);
    best_len = ns.size();
  }
  if (!best.empty()) return best;
  return "<" + iri + ">";
}

}  // namespace

std::string to_turtle_term(const Term& t, const PrefixMap& prefixes) {
  if (t.is_iri()) return compact_iri(t.as_iri().value(), prefixes);
  if (t.is_blank()) {
    const auto& label = t.as_blank().label();
    return "_:" + (plain_blank_label(label) ? label : hex_label(label));
  }
  const auto& lit = t.as_literal();
  const auto& dt = lit.datatype();
  if (dt == kXsdInteger && matches_integer(lit.lexical())) return lit.lexical();
  if (dt == kXsdDecimal && matches_decimal(lit.lexical())) return lit.lexical();
  if (dt == kXsdBoolean && (lit.lexical() == "true" || lit.lexical() == "false")) return lit.lexical();
  std::string out = "\"" + escape_string(lit.lexical()) + "\"";
  if (!lit.language().empty()) return out + "@" + lit.language();
  if (dt != kXsdString) out += "^^" + compact_iri(dt, prefixes);
  return out;
}

std::string serialize_turtle(const Graph& g) {
  const auto& prefixes = g.prefixes();
  std::string out;
  for (const auto& [prefix, ns] : prefixes) out += "@prefix " + prefix + ": <" + ns + "> .\n";

  // subject text -> predicate text -> sorted object texts
  std::map<std::string, std::map<std::string, std::vector<std::string>>> blocks;
  for (const auto& t : g) {
    std::string pred = t.predicate.as_iri().value() == kRdfType ? "a" : to_turtle_term(t.predicate, prefixes);
    blocks[to_turtle_term(t.subject, prefixes)][std::move(pred)].push_back(to_turtle_term(t.object, prefixes));
  }
  for (auto& [subject, preds] : blocks) {
    out += "\n" + subject;
    bool first_pred = true;
    for (auto& [pred, objects] : preds) {
      std::sort(objects.begin(), objects.end());
      out += first_pred ? " " : " ;\n    ";
      first_pred = false;
      out += pred + " ";
      for (std::size_t i = 0; i < objects.size(); ++i) {
        if (i) out += " , ";
        out += objects[i];
      }
    }
    out += " .\n";
  }
  return out;
}

std::string serialize_ntriples(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const auto& t : g) lines.push_back(t.to_ntriples());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace dmcc::rdf
