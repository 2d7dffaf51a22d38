#include "dmcc/rdf/term.hpp"

#include <cstdio>
#include <stdexcept>

#include "dmcc/decimal.hpp"

namespace dmcc::rdf {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool valid_language_tag(std::string_view tag) {
  if (tag.empty()) return false;
  bool subtag_start = true;
  for (char c : tag) {
    if (c == '-') {
      if (subtag_start) return false;
      subtag_start = true;
      continue;
    }
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    if (!alnum) return false;
    subtag_start = false;
  }
  return !subtag_start;
}

bool is_double_lexical(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  const auto e = s.find_first_of("eE");
  if (e == std::string_view::npos || e == 0) return false;
  std::string_view mant = s.substr(0, e);
  std::string_view exp = s.substr(e + 1);
  if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) exp.remove_prefix(1);
  if (exp.empty()) return false;
  for (char c : exp)
    if (c < '0' || c > '9') return false;
  bool digit = false;
  int dots = 0;
  for (char c : mant) {
    if (c == '.') {
      ++dots;
    } else if (c >= '0' && c <= '9') {
      digit = true;
    } else {
      return false;
    }
  }
  return digit && dots <= 1;
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw std::invalid_argument("invalid IRI: '" + value_ + "'");
}

bool Iri::is_valid(std::string_view text) {
  if (text.empty()) return false;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (char c : text)
    if (is_space(c) || c == '<' || c == '>' || c == '"') return false;
  return true;
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw std::invalid_argument("blank node label must not be empty");
}

Literal::Literal(std::string lexical, std::string datatype, std::string language)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)), language_(std::move(language)) {
  if (!language_.empty()) {
    if (!valid_language_tag(language_)) throw std::invalid_argument("invalid language tag: '" + language_ + "'");
    if (datatype_ != kRdfLangString) throw std::invalid_argument("language-tagged literal must be rdf:langString");
  } else if (datatype_ == kRdfLangString) {
    throw std::invalid_argument("rdf:langString literal requires a language tag");
  }
  if (!Iri::is_valid(datatype_)) throw std::invalid_argument("invalid datatype IRI: '" + datatype_ + "'");
  if (datatype_ == kXsdInteger) {
    std::string_view s = lexical_;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    bool ok = !s.empty();
    for (char c : s) ok = ok && c >= '0' && c <= '9';
    if (!ok) throw std::invalid_argument("malformed xsd:integer '" + lexical_ + "'");
  } else if (datatype_ == kXsdDecimal) {
    if (!compare_decimal_lexical(lexical_, "0")) throw std::invalid_argument("malformed xsd:decimal '" + lexical_ + "'");
  } else if (datatype_ == kXsdDouble) {
    if (!is_double_lexical(lexical_) && !compare_decimal_lexical(lexical_, "0") && lexical_ != "INF" &&
        lexical_ != "-INF" && lexical_ != "NaN")
      throw std::invalid_argument("malformed xsd:double '" + lexical_ + "'");
  } else if (datatype_ == kXsdBoolean) {
    if (lexical_ != "true" && lexical_ != "false" && lexical_ != "1" && lexical_ != "0")
      throw std::invalid_argument("malformed xsd:boolean '" + lexical_ + "'");
  }
}

Literal Literal::lang_string(std::string lexical, std::string language) {
  return Literal(std::move(lexical), std::string(kRdfLangString), std::move(language));
}
Literal Literal::integer(long long v) { return Literal(std::to_string(v), std::string(kXsdInteger)); }
Literal Literal::decimal(std::string lexical) { return Literal(std::move(lexical), std::string(kXsdDecimal)); }
Literal Literal::boolean(bool v) { return Literal(v ? "true" : "false", std::string(kXsdBoolean)); }

bool Literal::is_numeric() const {
  return datatype_ == kXsdInteger || datatype_ == kXsdDecimal || datatype_ == kXsdDouble;
}

const std::string& Term::text() const {
  if (is_iri()) return as_iri().value();
  if (is_blank()) return as_blank().label();
  return as_literal().lexical();
}

std::string escape_string(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string Term::to_ntriples() const {
  if (is_iri()) return "<" + as_iri().value() + ">";
  if (is_blank()) return "_:" + as_blank().label();
  const auto& lit = as_literal();
  std::string out = "\"" + escape_string(lit.lexical()) + "\"";
  if (!lit.language().empty()) return out + "@" + lit.language();
  if (lit.datatype() != kXsdString) out += "^^<" + lit.datatype() + ">";
  return out;
}

Triple::Triple(Term s, Term p, Term o) : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) throw std::invalid_argument("triple subject must be an IRI or blank node");
  if (!predicate.is_iri()) throw std::invalid_argument("triple predicate must be an IRI");
}

std::string Triple::to_ntriples() const {
  return subject.to_ntriples() + " " + predicate.to_ntriples() + " " + object.to_ntriples() + " .";
}

}  // namespace dmcc::rdf
