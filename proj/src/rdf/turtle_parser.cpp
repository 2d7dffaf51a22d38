#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "dmcc/rdf/turtle.hpp"

namespace dmcc::rdf {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                         (token.empty() ? std::string() : " near '" + token + "'")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

UnknownPrefixError::UnknownPrefixError(std::string prefix, std::size_t line, std::size_t column)
    : ParseError("unknown prefix '" + prefix + "'", line, column, prefix + ":"), prefix_(std::move(prefix)) {}

namespace {

// Anonymous nodes carry this marker until the whole document has been read,
// so their final labels can avoid every explicit label.
constexpr char kAnonMarker = '\x01';

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool pn_chars_base(char c) { return is_alpha(c) || is_high(c); }
bool pn_chars_u(char c) { return pn_chars_base(c) || c == '_'; }
bool pn_chars(char c) { return pn_chars_u(c) || c == '-' || is_digit(c); }
bool is_hex(char c) { return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : text_(text) {}

  Graph run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return finish();
  }

 private:
  struct Mark {
    std::size_t pos;
    std::size_t line;
    std::size_t column;
  };

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  PrefixMap prefixes_;
  std::vector<Triple> triples_;
  std::set<std::string> explicit_labels_;
  std::size_t anon_count_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  Mark mark() const { return {pos_, line_, column_}; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
    return c;
  }

  std::string token_at(const Mark& m) const {
    std::size_t end = m.pos;
    while (end < text_.size() && end - m.pos < 40) {
      const char c = text_[end];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') break;
      ++end;
    }
    if (end == m.pos && m.pos < text_.size()) ++end;
    return std::string(text_.substr(m.pos, end - m.pos));
  }

  [[noreturn]] void fail(const std::string& message, const Mark& m) const {
    throw ParseError(message, m.line, m.column, m.pos < text_.size() ? token_at(m) : "end of input");
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, mark()); }

  void skip_ws() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c || at_end()) fail(std::string("expected ") + what);
    advance();
  }

  bool keyword_ahead(std::string_view kw, bool case_insensitive) const {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i];
      char b = kw[i];
      if (case_insensitive) {
        a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    const char next = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
    return !(pn_chars(next) || next == ':');
  }

  void statement() {
    if (peek() == '@') {
      if (keyword_ahead("@prefix", false)) {
        prefix_directive(true);
        return;
      }
      if (keyword_ahead("@base", false)) fail("@base is not supported; use absolute IRIs");
      fail("unknown directive");
    }
    if (keyword_ahead("PREFIX", true)) {
      prefix_directive(false);
      return;
    }
    if (keyword_ahead("BASE", true)) fail("BASE is not supported; use absolute IRIs");
    triples();
    expect('.', "'.' at end of statement");
  }

  void prefix_directive(bool at_form) {
    for (std::size_t i = at_form ? 7 : 6; i > 0; --i) advance();
    skip_ws();
    const Mark m = mark();
    std::string prefix;
    while (!at_end() && peek() != ':' && (pn_chars(peek()) || peek() == '.')) prefix += advance();
    if (peek() != ':') fail("expected prefix name followed by ':'", m);
    advance();
    if (!is_valid_prefix(prefix)) fail("invalid prefix name", m);
    skip_ws();
    if (peek() != '<') fail("expected namespace IRI");
    std::string ns = iri_ref();
    prefixes_[prefix] = std::move(ns);
    if (at_form) expect('.', "'.' after @prefix directive");
  }

  void triples() {
    skip_ws();
    if (peek() == '[') {
      const Term subject = blank_property_list();
      skip_ws();
      if (peek() == '.') return;
      predicate_object_list(subject);
      return;
    }
    const Term subject = subject_term();
    predicate_object_list(subject);
  }

  Term subject_term() {
    skip_ws();
    const Mark m = mark();
    const char c = peek();
    if (c == '<') return iri_term();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') fail("RDF collections are not supported", m);
    if (c == '"' || c == '\'' || is_digit(c) || c == '+' || c == '-') fail("a literal cannot be a subject", m);
    if (pn_chars_base(c) || c == ':') {
      auto t = name_or_keyword();
      if (t.is_iri()) return t;
    }
    fail("expected subject", m);
  }

  void predicate_object_list(const Term& subject) {
    verb_object_list(subject);
    for (;;) {
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        advance();
        skip_ws();
      }
      const char c = peek();
      if (c == '.' || c == ']' || at_end()) return;
      verb_object_list(subject);
    }
  }

  void verb_object_list(const Term& subject) {
    skip_ws();
    const Mark m = mark();
    Term predicate = verb();
    for (;;) {
      Term obj = object();
      try {
        triples_.emplace_back(subject, predicate, std::move(obj));
      } catch (const std::invalid_argument& e) {
        fail(e.what(), m);
      }
      skip_ws();
      if (peek() != ',') return;
      advance();
    }
  }

  Term verb() {
    skip_ws();
    const Mark m = mark();
    if (peek() == 'a') {
      const char next = peek(1);
      if (!(pn_chars(next) || next == ':' || next == '.')) {
        advance();
        return Term::iri(std::string(kRdfType));
      }
    }
    if (peek() == '<') return iri_term();
    if (pn_chars_base(peek()) || peek() == ':') {
      auto t = name_or_keyword();
      if (t.is_iri()) return t;
    }
    if (peek() == '_' && peek(1) == ':') fail("a blank node cannot be a predicate", m);
    fail("expected predicate", m);
  }

  Term object() {
    skip_ws();
    const Mark m = mark();
    const char c = peek();
    if (at_end()) fail("expected object", m);
    if (c == '<') {
      if (peek(1) == '<') fail("quoted triples are not supported", m);
      return iri_term();
    }
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_property_list();
    if (c == '(') fail("RDF collections are not supported", m);
    if (c == '"' || c == '\'') return string_literal();
    if (is_digit(c) || c == '+' || c == '-' || (c == '.' && is_digit(peek(1)))) return numeric_literal();
    if (pn_chars_base(c) || c == ':') return name_or_keyword();
    fail("expected object", m);
  }

  Term blank_property_list() {
    advance();  // '['
    Term node = Term::blank(std::string(1, kAnonMarker) + std::to_string(anon_count_++));
    skip_ws();
    if (peek() == ']') {
      advance();
      return node;
    }
    predicate_object_list(node);
    expect(']', "']' to close blank node property list");
    return node;
  }

  Term blank_label() {
    const Mark m = mark();
    advance();
    advance();
    std::string label;
    const char first = peek();
    if (!(pn_chars_u(first) || is_digit(first))) fail("invalid blank node label", m);
    while (!at_end() && (pn_chars(peek()) || peek() == '.')) {
      if (peek() == '.' && !(pn_chars(peek(1)) || peek(1) == '.')) break;
      label += advance();
    }
    explicit_labels_.insert(label);
    return Term::blank(std::move(label));
  }

  std::uint32_t read_hex(std::size_t digits, const Mark& m) {
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char h = peek();
      if (!is_hex(h) || at_end()) fail("invalid unicode escape", m);
      advance();
      cp = cp * 16 + static_cast<std::uint32_t>(is_digit(h) ? h - '0' : (std::tolower(h) - 'a' + 10));
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid code point in escape", m);
    return cp;
  }

  std::string iri_ref() {
    const Mark m = mark();
    advance();  // '<'
    std::string value;
    for (;;) {
      if (at_end()) fail("unterminated IRI", m);
      const char c = peek();
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        const char e = peek();
        if (e == 'u' || e == 'U') {
          advance();
          append_utf8(value, read_hex(e == 'u' ? 4 : 8, m));
          continue;
        }
        fail("invalid escape in IRI", m);
      }
      if (c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`')
        fail("invalid character in IRI", m);
      value += advance();
    }
    if (!Iri::is_valid(value)) fail("relative IRIs are not supported", m);
    return value;
  }

  Term iri_term() { return Term::iri(iri_ref()); }

  // Prefixed name, or one of the bare keywords true/false.
  Term name_or_keyword() {
    const Mark m = mark();
    std::string prefix;
    while (!at_end() && (pn_chars(peek()) || peek() == '.') && peek() != ':') {
      if (peek() == '.' && !(pn_chars(peek(1)) || peek(1) == '.' || peek(1) == ':')) break;
      prefix += advance();
    }
    if (peek() != ':') {
      if (prefix == "true" || prefix == "false") return Term(Literal::boolean(prefix == "true"));
      fail("unexpected token", m);
    }
    advance();  // ':'
    if (!is_valid_prefix(prefix)) fail("invalid prefix name", m);
    std::string local = local_name(m);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) throw UnknownPrefixError(prefix, m.line, m.column);
    const std::string iri = it->second + local;
    if (!Iri::is_valid(iri)) fail("prefixed name expands to an invalid IRI", m);
    return Term::iri(iri);
  }

  std::string local_name(const Mark& m) {
    std::string local;
    auto starts_local = [&](char c) { return pn_chars_u(c) || is_digit(c) || c == ':' || c == '%' || c == '\\'; };
    if (!starts_local(peek()) || at_end()) return local;
    for (;;) {
      if (at_end()) break;
      const char c = peek();
      if (c == '%') {
        if (!is_hex(peek(1)) || !is_hex(peek(2))) fail("invalid percent escape in local name", m);
        local += advance();
        local += advance();
        local += advance();
        continue;
      }
      if (c == '\\') {
        advance();
        const char e = peek();
        if (std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) == std::string_view::npos || at_end())
          fail("invalid escape in local name", m);
        local += advance();
        continue;
      }
      if (c == '.') {
        // A trailing dot ends the statement instead of the name.
        const char n = peek(1);
        if (pn_chars(n) || n == ':' || n == '.' || n == '%' || n == '\\') {
          local += advance();
          continue;
        }
        break;
      }
      if (pn_chars(c) || c == ':') {
        local += advance();
        continue;
      }
      break;
    }
    return local;
  }

  Term string_literal() {
    const Mark m = mark();
    const char quote = peek();
    const bool long_form = peek(1) == quote && peek(2) == quote;
    for (int i = 0; i < (long_form ? 3 : 1); ++i) advance();
    std::string value;
    for (;;) {
      if (at_end()) fail("unterminated string literal", m);
      const char c = peek();
      if (long_form) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          // Up to two extra quotes may close a long string ("""a"""" is a").
          if (peek(3) == quote) {
            value += advance();
            continue;
          }
          advance();
          advance();
          advance();
          break;
        }
      } else {
        if (c == quote) {
          advance();
          break;
        }
        if (c == '\n' || c == '\r') fail("newline in short string literal", m);
      }
      if (c == '\\') {
        const Mark esc = mark();
        advance();
        const char e = at_end() ? '\0' : advance();
        switch (e) {
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u': append_utf8(value, read_hex(4, esc)); break;
          case 'U': append_utf8(value, read_hex(8, esc)); break;
          default: fail("invalid escape sequence in string", esc);
        }
        continue;
      }
      value += advance();
    }
    if (peek() == '@') {
      advance();
      std::string lang;
      while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '-')) lang += advance();
      try {
        return Term(Literal::lang_string(std::move(value), std::move(lang)));
      } catch (const std::invalid_argument& e) {
        fail(e.what(), m);
      }
    }
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      Term dt = peek() == '<' ? iri_term() : name_or_keyword();
      if (!dt.is_iri()) fail("datatype must be an IRI", m);
      try {
        return Term(Literal(std::move(value), dt.as_iri().value()));
      } catch (const std::invalid_argument& e) {
        fail(e.what(), m);
      }
    }
    return Term(Literal(std::move(value)));
  }

  Term numeric_literal() {
    const Mark m = mark();
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += advance();
    while (is_digit(peek())) lex += advance();
    bool decimal = false;
    if (peek() == '.' && is_digit(peek(1))) {
      decimal = true;
      lex += advance();
      while (is_digit(peek())) lex += advance();
    }
    bool exponent = false;
    if ((peek() == 'e' || peek() == 'E') && (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      exponent = true;
      lex += advance();
      if (peek() == '+' || peek() == '-') lex += advance();
      while (is_digit(peek())) lex += advance();
    }
    if (lex.empty() || lex == "+" || lex == "-") fail("malformed number", m);
    if (pn_chars_base(peek()) || peek() == '_') fail("malformed number", m);
    std::string_view dt = exponent ? kXsdDouble : decimal ? kXsdDecimal : kXsdInteger;
    try {
      return Term(Literal(std::move(lex), std::string(dt)));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), m);
    }
  }

  Graph finish() {
    std::vector<std::string> fresh(anon_count_);
    std::size_t next = 0;
    for (auto& label : fresh) {
      while (explicit_labels_.count("b" + std::to_string(next))) ++next;
      label = "b" + std::to_string(next++);
    }
    auto relabel = [&](const Term& t) -> Term {
      if (t.is_blank() && !t.as_blank().label().empty() && t.as_blank().label()[0] == kAnonMarker)
        return Term::blank(fresh[std::stoul(t.as_blank().label().substr(1))]);
      return t;
    };
    Graph g;
    for (const auto& [p, ns] : prefixes_) g.set_prefix(p, ns);
    for (const auto& t : triples_) g.insert(relabel(t.subject), t.predicate, relabel(t.object));
    return g;
  }
};

}  // namespace

Graph parse_turtle(std::string_view text) { return TurtleParser(text).run(); }

}  // namespace dmcc::rdf
