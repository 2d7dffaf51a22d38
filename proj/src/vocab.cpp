#include "dmcc/vocab.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace dmcc::vocab {

// Defined in the generated manifest_data.cpp.
extern const char* const kEmbeddedManifest;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::pair<std::string, std::string> split_curie(std::string_view curie) {
  const auto colon = curie.find(':');
  if (colon == std::string_view::npos)
    throw VocabError(VocabError::Kind::kMalformedCurie, "not a prefixed name: '" + std::string(curie) + "'");
  return {std::string(curie.substr(0, colon)), std::string(curie.substr(colon + 1))};
}

}  // namespace

std::string_view to_string(TermKind kind) {
  switch (kind) {
    case TermKind::kClass: return "class";
    case TermKind::kProperty: return "property";
    case TermKind::kUnknown: break;
  }
  return "unknown";
}

TermRegistry TermRegistry::from_manifest(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  TermRegistry reg;
  reg.manifest_ = std::string(text);
  for (const auto& [prefix, ns] : doc.at("namespaces").items()) reg.prefixes_[prefix] = ns.get<std::string>();

  for (const auto& entry : doc.at("terms")) {
    VocabTerm t;
    t.curie = entry.at("curie").get<std::string>();
    const auto kind = entry.at("kind").get<std::string>();
    if (kind == "class") {
      t.kind = TermKind::kClass;
    } else if (kind == "property") {
      t.kind = TermKind::kProperty;
    } else {
      throw std::runtime_error("manifest: bad kind for " + t.curie);
    }
    t.note = entry.value("note", "");
    const auto [prefix, local] = split_curie(t.curie);
    auto ns = reg.prefixes_.find(prefix);
    if (ns == reg.prefixes_.end()) throw std::runtime_error("manifest: unknown prefix in " + t.curie);
    t.iri = ns->second + local;
    if (entry.contains("iri") && entry.at("iri").get<std::string>() != t.iri)
      throw std::runtime_error("manifest: iri does not match curie for " + t.curie);
    if (reg.by_curie_.count(t.curie)) throw std::runtime_error("manifest: duplicate curie " + t.curie);
    reg.by_curie_[t.curie] = reg.terms_.size();
    reg.by_iri_[t.iri] = reg.terms_.size();
    reg.terms_.push_back(std::move(t));
  }

  for (const auto& [alias, canonical] : doc.at("aliases").items()) {
    const auto [prefix, local] = split_curie(alias);
    const std::string alias_iri = reg.prefixes_.at(prefix) + local;
    const auto* target = reg.find_curie(canonical.get<std::string>());
    if (!target) throw std::runtime_error("manifest: alias target not registered: " + canonical.get<std::string>());
    reg.alias_to_canonical_[alias_iri] = target->iri;
  }

  for (const auto& u : doc.at("units")) {
    UnitInfo info{u.at("code").get<std::string>(), u.at("name").get<std::string>(),
                  u.at("dimension").get<std::string>(), std::nullopt};
    if (u.contains("gigabytes")) info.gigabytes = Decimal::parse(u.at("gigabytes").get<std::string>());
    reg.units_.push_back(std::move(info));
  }
  for (const auto& [alias, code] : doc.at("unitAliases").items()) reg.unit_aliases_[alias] = code.get<std::string>();
  for (const auto& [normalized, spellings] : doc.at("unitText").items())
    for (const auto& s : spellings) reg.unit_text_[lower(s.get<std::string>())] = normalized;
  for (const auto& c : doc.at("currencies")) reg.currencies_.insert(c.get<std::string>());
  return reg;
}

const TermRegistry& TermRegistry::instance() {
  static const TermRegistry registry = from_manifest(kEmbeddedManifest);
  return registry;
}

std::string TermRegistry::resolve(std::string_view curie, bool strict) const {
  const auto [prefix, local] = split_curie(curie);
  auto ns = prefixes_.find(prefix);
  if (ns == prefixes_.end())
    throw VocabError(VocabError::Kind::kUnknownPrefix, "unknown prefix '" + prefix + "' in '" + std::string(curie) + "'");
  std::string iri = canonical_iri(ns->second + local);
  if (strict && !by_iri_.count(iri))
    throw VocabError(VocabError::Kind::kUnknownTerm, "unregistered term '" + std::string(curie) + "'");
  return iri;
}

const VocabTerm* TermRegistry::find_curie(std::string_view curie) const {
  auto it = by_curie_.find(std::string(curie));
  return it == by_curie_.end() ? nullptr : &terms_[it->second];
}

const VocabTerm* TermRegistry::find_iri(std::string_view iri) const {
  auto it = by_iri_.find(canonical_iri(iri));
  return it == by_iri_.end() ? nullptr : &terms_[it->second];
}

TermKind TermRegistry::kind_of(std::string_view iri) const {
  const auto* t = find_iri(iri);
  return t ? t->kind : TermKind::kUnknown;
}

std::string TermRegistry::canonical_iri(std::string_view iri) const {
  auto it = alias_to_canonical_.find(std::string(iri));
  return it == alias_to_canonical_.end() ? std::string(iri) : it->second;
}

std::vector<std::string> TermRegistry::spellings(std::string_view canonical) const {
  std::vector<std::string> out{std::string(canonical)};
  for (const auto& [alias, target] : alias_to_canonical_)
    if (target == canonical) out.push_back(alias);
  return out;
}

std::string TermRegistry::canonical_unit(std::string_view code) const {
  auto it = unit_aliases_.find(std::string(code));
  return it == unit_aliases_.end() ? std::string(code) : it->second;
}

const UnitInfo* TermRegistry::unit(std::string_view code) const {
  const std::string canonical = canonical_unit(code);
  for (const auto& u : units_)
    if (u.code == canonical) return &u;
  return nullptr;
}

std::optional<std::string> TermRegistry::normalize_unit_text(std::string_view text) const {
  auto it = unit_text_.find(lower(text));
  if (it == unit_text_.end()) return std::nullopt;
  return it->second;
}

std::string TermRegistry::compact(std::string_view iri) const {
  std::string best;
  std::size_t best_len = 0;
  for (const auto& [prefix, ns] : prefixes_) {
    if (ns.size() > best_len && iri.substr(0, ns.size()) == ns) {
      best = prefix + ":" + std::string(iri.substr(ns.size()));
      best_len = ns.size();
    }
  }
  return best.empty() ? "<" + std::string(iri) + ">" : best;
}

rdf::Term term(std::string_view curie) { return rdf::Term::iri(TermRegistry::instance().resolve(curie, true)); }

}  // namespace dmcc::vocab
