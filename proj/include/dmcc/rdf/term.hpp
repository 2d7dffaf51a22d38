#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace dmcc::rdf {

inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kRdfLangString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

// Absolute IRI. Construction validates: non-empty, has a scheme separator,
// no whitespace.
class Iri {
 public:
  explicit Iri(std::string value);
  const std::string& value() const { return value_; }
  static bool is_valid(std::string_view text);
  friend auto operator<=>(const Iri&, const Iri&) = default;
  friend bool operator==(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

class BlankNode {
 public:
  explicit BlankNode(std::string label);
  const std::string& label() const { return label_; }
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
  friend bool operator==(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

// Equality is structural over (lexical, datatype, language); no value-space
// normalization happens here.
class Literal {
 public:
  explicit Literal(std::string lexical, std::string datatype = std::string(kXsdString),
                   std::string language = {});
  static Literal lang_string(std::string lexical, std::string language);
  static Literal integer(long long v);
  static Literal decimal(std::string lexical);
  static Literal boolean(bool v);

  const std::string& lexical() const { return lexical_; }
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }
  bool is_numeric() const;
  bool is_plain_string() const { return datatype_ == kXsdString; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  std::string lexical_;
  std::string datatype_;
  std::string language_;
};

class Term {
 public:
  Term(Iri iri) : v_(std::move(iri)) {}
  Term(BlankNode b) : v_(std::move(b)) {}
  Term(Literal l) : v_(std::move(l)) {}

  static Term iri(std::string value) { return Term(Iri(std::move(value))); }
  static Term blank(std::string label) { return Term(BlankNode(std::move(label))); }
  static Term literal(std::string lexical) { return Term(Literal(std::move(lexical))); }

  bool is_iri() const { return std::holds_alternative<Iri>(v_); }
  bool is_blank() const { return std::holds_alternative<BlankNode>(v_); }
  bool is_literal() const { return std::holds_alternative<Literal>(v_); }
  bool is_resource() const { return !is_literal(); }

  const Iri& as_iri() const { return std::get<Iri>(v_); }
  const BlankNode& as_blank() const { return std::get<BlankNode>(v_); }
  const Literal& as_literal() const { return std::get<Literal>(v_); }

  // IRI value, blank label, or literal lexical form.
  const std::string& text() const;

  // N-Triples rendering: <iri>, _:label, "lex"^^<dt>, "lex"@lang.
  std::string to_ntriples() const;

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::variant<Iri, BlankNode, Literal> v_;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  // Throws std::invalid_argument when a term sits in a position RDF forbids.
  Triple(Term s, Term p, Term o);

  std::string to_ntriples() const;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// N-Triples string escaping (\" \\ \n \r \t, other controls as \u00xx).
std::string escape_string(std::string_view s);

}  // namespace dmcc::rdf
