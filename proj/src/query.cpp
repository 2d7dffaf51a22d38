#include "dmcc/query.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>

#include "dmcc/vocab.hpp"

namespace dmcc::query {
namespace {

enum class Tok { kIri, kPname, kVar, kBlank, kString, kNumber, kWord, kPunct, kOp, kUnsupported, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  // string literals
  std::string language;
  bool has_datatype = false;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}


class Lexer {
 public:
  explicit Lexer(std::string_view text) : s_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      lex_one(t);
      out.push_back(std::move(t));
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t line, std::size_t col) {
    throw QueryError(QueryError::Kind::kSyntax, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg,
                     line, col);
  }

  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < s_.size(); ++i) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  // '<' opens an IRI only when a '>' closes it before any whitespace.
  bool iri_ahead() const {
    for (std::size_t i = pos_ + 1; i < s_.size(); ++i) {
      char c = s_[i];
      if (c == '>') return i > pos_ + 1;
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"' || c == '{' || c == '}') return false;
    }
    return false;
  }

  std::string read_local() {
    std::string out;
    while (pos_ < s_.size() && (is_name_char(peek()) || peek() == '.')) {
      if (peek() == '.' && !is_name_char(peek(1))) break;
      out += peek();
      advance();
    }
    return out;
  }

  void lex_one(Token& t) {
    const char c = peek();
    const std::size_t line = line_, col = col_;
    if (c == '<' && iri_ahead()) {
      advance();
      while (peek() != '>') {
        t.text += peek();
        advance();
      }
      advance();
      t.kind = Tok::kIri;
      return;
    }
    if (c == '?' || c == '$') {
      advance();
      if (!is_name_start(peek()) && !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a variable name", line, col);
      while (is_name_char(peek()) && peek() != '-') {
        t.text += peek();
        advance();
      }
      t.kind = Tok::kVar;
      return;
    }
    if (c == '_' && peek(1) == ':') {
      advance(2);
      t.text = read_local();
      if (t.text.empty()) fail("expected a blank node label", line, col);
      t.kind = Tok::kBlank;
      return;
    }
    if (c == '"' || c == '\'') {
      lex_string(t, c);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && std::isdigit(static_cast<unsigned char>(peek(1)))) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      lex_number(t);
      return;
    }
    if (is_name_start(c) || c == ':') {
      std::string word;
      while (is_name_char(peek())) {
        word += peek();
        advance();
      }
      if (peek() == ':') {
        advance();
        t.text = word + ":" + read_local();
        t.kind = Tok::kPname;
      } else {
        t.text = word;
        t.kind = Tok::kWord;
      }
      return;
    }
    if (c == '^' && peek(1) == '^') {
      advance(2);
      t.text = "^^";
      t.kind = Tok::kPunct;
      return;
    }
    for (std::string_view op : {"<=", ">=", "!="}) {
      if (s_.substr(pos_, 2) == op) {
        advance(2);
        t.text = op;
        t.kind = Tok::kOp;
        return;
      }
    }
    for (std::string_view op : {"&&", "||"}) {
      if (s_.substr(pos_, 2) == op) {
        advance(2);
        t.text = op;
        t.kind = Tok::kUnsupported;
        return;
      }
    }
    advance();
    t.text = std::string(1, c);
    switch (c) {
      case '<':
      case '>':
      case '=':
        t.kind = Tok::kOp;
        return;
      case '{':
      case '}':
      case '(':
      case ')':
      case '.':
      case ';':
      case ',':
      case '*':
        t.kind = Tok::kPunct;
        return;
      case '!':
      case '|':
      case '/':
      case '^':
        t.kind = Tok::kUnsupported;
        return;
      default:
        fail(std::string("unexpected character '") + c + "'", line, col);
    }
  }

  void lex_string(Token& t, char quote) {
    const std::size_t line = line_, col = col_;
    advance();
    for (;;) {
      if (pos_ >= s_.size() || peek() == '\n') fail("unterminated string", line, col);
      char c = peek();
      if (c == quote) break;
      if (c == '\\') {
        advance();
        switch (peek()) {
          case 'n': t.text += '\n'; break;
          case 't': t.text += '\t'; break;
          case 'r': t.text += '\r'; break;
          case '"': t.text += '"'; break;
          case '\'': t.text += '\''; break;
          case '\\': t.text += '\\'; break;
          default: fail("unknown escape in string", line_, col_);
        }
        advance();
        continue;
      }
      t.text += c;
      advance();
    }
    advance();
    t.kind = Tok::kString;
    if (peek() == '@') {
      advance();
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') {
        t.language += peek();
        advance();
      }
      if (t.language.empty()) fail("expected a language tag", line_, col_);
    } else if (peek() == '^' && peek(1) == '^') {
      t.has_datatype = true;
    }
  }

  void lex_number(Token& t) {
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.text += peek();
        advance();
      }
    };
    if (peek() == '-' || peek() == '+') {
      t.text += peek();
      advance();
    }
    digits();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      t.text += '.';
      advance();
      digits();
    }
    if (peek() == 'e' || peek() == 'E') {
      t.text += peek();
      advance();
      if (peek() == '-' || peek() == '+') {
        t.text += peek();
        advance();
      }
      digits();
    }
    t.kind = Tok::kNumber;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  SelectQuery run() {
    while (is_word("PREFIX")) parse_prefix();
    reject_unsupported();
    expect_word("SELECT");
    if (is_word("DISTINCT")) {
      q_.distinct = true;
      next();
    }
    reject_unsupported();
    bool star = false;
    if (is_punct("*")) {
      star = true;
      next();
    } else {
      while (peek().kind == Tok::kVar) q_.projected.push_back(Variable{next().text});
      if (is_punct("(")) unsupported(peek(), "expressions in SELECT");
      if (q_.projected.empty()) syntax(peek(), "expected '*' or a variable after SELECT");
    }
    reject_unsupported();
    if (is_word("WHERE")) next();
    expect_punct("{");
    parse_group();
    expect_punct("}");
    reject_unsupported();
    if (is_word("ORDER")) parse_order();
    reject_unsupported();
    if (is_word("LIMIT")) parse_limit();
    reject_unsupported();
    if (peek().kind != Tok::kEnd) syntax(peek(), "unexpected '" + peek().text + "' after the query");
    check(star);
    return std::move(q_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }

  bool is_word(std::string_view kw) const { return peek().kind == Tok::kWord && upper(peek().text) == kw; }
  bool is_punct(std::string_view p) const { return peek().kind == Tok::kPunct && peek().text == p; }

  [[noreturn]] static void syntax(const Token& t, const std::string& msg) {
    throw QueryError(QueryError::Kind::kSyntax,
                     "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + msg, t.line,
                     t.column);
  }

  [[noreturn]] static void unsupported(const Token& t, const std::string& what) {
    throw QueryError(QueryError::Kind::kUnsupportedKeyword,
                     "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + what +
                         " is not supported",
                     t.line, t.column);
  }

  void reject_unsupported() const {
    const Token& t = peek();
    if (t.kind == Tok::kUnsupported) unsupported(t, "'" + t.text + "'");
    if (t.kind != Tok::kWord) return;
    const std::string u = upper(t.text);
    for (auto kw : unsupported_keywords())
      if (u == kw) unsupported(t, u);
  }

  void expect_word(std::string_view kw) {
    if (!is_word(kw)) syntax(peek(), "expected " + std::string(kw) + describe(peek()));
    next();
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) syntax(peek(), "expected '" + std::string(p) + "'" + describe(peek()));
    next();
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::kEnd ? " at end of query" : ", found '" + t.text + "'";
  }

  void parse_prefix() {
    next();
    const Token& p = next();
    if (p.kind != Tok::kPname || p.text.back() != ':') syntax(p, "expected a prefix name ending in ':'");
    const Token& iri = next();
    if (iri.kind != Tok::kIri) syntax(iri, "expected an IRI in angle brackets");
    prefixes_[p.text.substr(0, p.text.size() - 1)] = iri.text;
  }

  std::string expand(const Token& t) const {
    const auto colon = t.text.find(':');
    const std::string prefix = t.text.substr(0, colon);
    auto it = prefixes_.find(prefix);
    if (it != prefixes_.end()) return it->second + t.text.substr(colon + 1);
    try {
      return vocab::TermRegistry::instance().resolve(t.text);
    } catch (const vocab::VocabError& e) {
      const auto kind = e.kind() == vocab::VocabError::Kind::kUnknownPrefix ? QueryError::Kind::kUnknownPrefix
                                                                             : QueryError::Kind::kSyntax;
      throw QueryError(kind, "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + e.what(),
                       t.line, t.column);
    }
  }

  Term literal_from(const Token& t) {
    if (t.kind == Tok::kNumber) {
      if (t.text.find_first_of("eE") != std::string::npos) return Term(rdf::Literal(t.text, std::string(rdf::kXsdDouble)));
      if (t.text.find('.') != std::string::npos) return Term(rdf::Literal(t.text, std::string(rdf::kXsdDecimal)));
      return Term(rdf::Literal(t.text, std::string(rdf::kXsdInteger)));
    }
    if (!t.language.empty()) return Term(rdf::Literal::lang_string(t.text, t.language));
    if (t.has_datatype) {
      next();  // ^^
      const Token& dt = next();
      if (dt.kind == Tok::kIri) return Term(rdf::Literal(t.text, dt.text));
      if (dt.kind == Tok::kPname) return Term(rdf::Literal(t.text, expand(dt)));
      syntax(dt, "expected a datatype IRI");
    }
    return Term(rdf::Literal(t.text));
  }

  Slot parse_slot(bool predicate) {
    reject_unsupported();
    const Token& t = next();
    switch (t.kind) {
      case Tok::kVar:
        return Variable{t.text};
      case Tok::kBlank:
        if (predicate) syntax(t, "a blank node cannot be a predicate");
        return Variable{"_:" + t.text};
      case Tok::kIri:
        return Term::iri(t.text);
      case Tok::kPname:
        return Term::iri(expand(t));
      case Tok::kString:
      case Tok::kNumber:
        if (predicate) syntax(t, "a literal cannot be a predicate");
        return literal_from(t);
      case Tok::kWord:
        if (t.text == "a" && predicate) return Term::iri(std::string(rdf::kRdfType));
        if (!predicate && (t.text == "true" || t.text == "false")) return Term(rdf::Literal::boolean(t.text == "true"));
        break;
      case Tok::kPunct:
        if (t.text == "[" || t.text == "(") unsupported(t, "'" + t.text + "'");
        break;
      default:
        break;
    }
    syntax(t, "expected a term or variable" + describe(t));
  }

  void parse_group() {
    for (;;) {
      reject_unsupported();
      if (is_punct("}") || peek().kind == Tok::kEnd) return;
      if (is_punct("{")) unsupported(peek(), "nested group patterns");
      if (is_word("FILTER")) {
        parse_filter();
        if (is_punct(".")) next();
        continue;
      }
      Slot subject = parse_slot(false);
      for (;;) {
        Slot pred = parse_slot(true);
        for (;;) {
          Slot obj = parse_slot(false);
          q_.patterns.push_back(TriplePattern{subject, pred, std::move(obj)});
          if (!is_punct(",")) break;
          next();
        }
        reject_unsupported();
        if (!is_punct(";")) break;
        next();
        if (is_punct(".") || is_punct("}")) break;
      }
      if (is_punct(".")) {
        next();
      } else if (!is_punct("}") && !is_word("FILTER")) {
        reject_unsupported();
        syntax(peek(), "expected '.' or '}'" + describe(peek()));
      }
    }
  }

  Slot parse_operand() {
    reject_unsupported();
    const Token& t = peek();
    if (t.kind == Tok::kBlank) syntax(t, "blank nodes cannot appear in a filter");
    if (t.kind == Tok::kWord && t.text == "a") syntax(t, "expected a value" + describe(t));
    return parse_slot(false);
  }

  void parse_filter() {
    next();
    expect_punct("(");
    reject_unsupported();
    FilterExpr f;
    if (peek().kind == Tok::kWord && upper(peek().text) == "CONTAINS") {
      next();
      expect_punct("(");
      f.op = FilterOp::kContains;
      f.left = expect_var();
      expect_punct(",");
      f.right = parse_operand();
      expect_punct(")");
    } else {
      if (peek().kind == Tok::kWord) unsupported(peek(), "function '" + peek().text + "'");
      f.left = expect_var();
      reject_unsupported();
      const Token& op = next();
      if (op.kind != Tok::kOp) syntax(op, "expected a comparison operator" + describe(op));
      static const std::map<std::string, FilterOp> ops = {{"=", FilterOp::kEq},  {"!=", FilterOp::kNe},
                                                          {"<", FilterOp::kLt},  {"<=", FilterOp::kLe},
                                                          {">", FilterOp::kGt},  {">=", FilterOp::kGe}};
      f.op = ops.at(op.text);
      f.right = parse_operand();
    }
    reject_unsupported();
    expect_punct(")");
    q_.filters.push_back(std::move(f));
  }

  Variable expect_var() {
    const Token& t = next();
    if (t.kind != Tok::kVar) syntax(t, "expected a variable" + describe(t));
    return Variable{t.text};
  }

  void parse_order() {
    next();
    expect_word("BY");
    OrderBy ob;
    if (is_word("ASC") || is_word("DESC")) {
      ob.direction = is_word("DESC") ? Direction::kDesc : Direction::kAsc;
      next();
      expect_punct("(");
      ob.var = expect_var();
      expect_punct(")");
    } else {
      ob.var = expect_var();
    }
    if (peek().kind == Tok::kVar || is_word("ASC") || is_word("DESC")) unsupported(peek(), "ordering by several keys");
    q_.order_by = ob;
  }

  void parse_limit() {
    next();
    const Token& n = next();
    if (n.kind != Tok::kNumber || n.text.find_first_not_of("0123456789") != std::string::npos)
      syntax(n, "expected a non-negative integer after LIMIT");
    if (n.text.size() > 18) syntax(n, "LIMIT is too large");
    const auto v = std::stoull(n.text);
    if (v == 0)
      throw QueryError(QueryError::Kind::kInvalidQuery, "LIMIT must be positive", n.line, n.column);
    q_.limit = static_cast<std::size_t>(v);
  }

  void check(bool star) {
    if (q_.patterns.empty()) throw QueryError(QueryError::Kind::kInvalidQuery, "the WHERE clause has no triple patterns");
    const auto vars = pattern_variables(q_);
    auto bound = [&](const Variable& v) { return std::find(vars.begin(), vars.end(), v) != vars.end(); };
    if (star) {
      for (const auto& v : vars)
        if (v.name.rfind("_:", 0) != 0) q_.projected.push_back(v);
      if (q_.projected.empty())
        throw QueryError(QueryError::Kind::kInvalidQuery, "SELECT * over patterns without named variables");
    }
    std::set<Variable> seen;
    for (const auto& v : q_.projected) {
      if (!seen.insert(v).second)
        throw QueryError(QueryError::Kind::kInvalidQuery, "?" + v.name + " is projected twice");
      if (!bound(v)) throw QueryError(QueryError::Kind::kInvalidQuery, "?" + v.name + " does not occur in the patterns");
    }
    for (const auto& f : q_.filters) {
      if (!bound(f.left))
        throw QueryError(QueryError::Kind::kInvalidQuery, "filter variable ?" + f.left.name + " does not occur in the patterns");
      if (const auto* r = std::get_if<Variable>(&f.right); r && !bound(*r))
        throw QueryError(QueryError::Kind::kInvalidQuery, "filter variable ?" + r->name + " does not occur in the patterns");
    }
    if (q_.order_by && !bound(q_.order_by->var))
      throw QueryError(QueryError::Kind::kInvalidQuery, "ORDER BY ?" + q_.order_by->var.name + " does not occur in the patterns");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
  SelectQuery q_;
};

// Exact value of an xsd:integer or xsd:decimal lexical form.
struct Exact {
  bool negative = false;
  std::string whole;     // no leading zeros
  std::string fraction;  // no trailing zeros
};

std::optional<Exact> parse_exact(const std::string& lex, bool allow_point) {
  Exact e;
  std::size_t i = 0;
  if (i < lex.size() && (lex[i] == '+' || lex[i] == '-')) e.negative = lex[i++] == '-';
  std::size_t digits = 0;
  while (i < lex.size() && std::isdigit(static_cast<unsigned char>(lex[i]))) {
    e.whole += lex[i++];
    ++digits;
  }
  if (i < lex.size() && lex[i] == '.' && allow_point) {
    ++i;
    while (i < lex.size() && std::isdigit(static_cast<unsigned char>(lex[i]))) {
      e.fraction += lex[i++];
      ++digits;
    }
  }
  if (i != lex.size() || digits == 0) return std::nullopt;
  e.whole.erase(0, std::min(e.whole.find_first_not_of('0'), e.whole.size()));
  while (!e.fraction.empty() && e.fraction.back() == '0') e.fraction.pop_back();
  if (e.whole.empty() && e.fraction.empty()) e.negative = false;
  return e;
}

int compare_magnitude(const Exact& a, const Exact& b) {
  if (a.whole.size() != b.whole.size()) return a.whole.size() < b.whole.size() ? -1 : 1;
  if (int c = a.whole.compare(b.whole)) return c < 0 ? -1 : 1;
  if (int c = a.fraction.compare(b.fraction)) return c < 0 ? -1 : 1;
  return 0;
}

int compare_exact(const Exact& a, const Exact& b) {
  if (a.negative != b.negative) return a.negative ? -1 : 1;
  const int m = compare_magnitude(a, b);
  return a.negative ? -m : m;
}

struct Numeric {
  std::optional<Exact> exact;
  double approx = 0;
};

std::optional<Numeric> numeric_value(const Term& t) {
  if (!t.is_literal()) return std::nullopt;
  const auto& lit = t.as_literal();
  Numeric n;
  if (lit.datatype() == rdf::kXsdInteger || lit.datatype() == rdf::kXsdDecimal) {
    n.exact = parse_exact(lit.lexical(), lit.datatype() == rdf::kXsdDecimal);
    if (!n.exact) return std::nullopt;
  } else if (lit.datatype() != rdf::kXsdDouble) {
    return std::nullopt;
  }
  const char* begin = lit.lexical().c_str();
  char* end = nullptr;
  n.approx = std::strtod(begin, &end);
  if (end == begin || *end != '\0') return std::nullopt;
  return n;
}

int compare_numeric(const Numeric& a, const Numeric& b) {
  if (a.exact && b.exact) return compare_exact(*a.exact, *b.exact);
  return a.approx < b.approx ? -1 : (b.approx < a.approx ? 1 : 0);
}

bool is_stringish(const Term& t) {
  return t.is_literal() && (t.as_literal().is_plain_string() || t.as_literal().datatype() == rdf::kRdfLangString);
}

int rank(const Term& t) { return t.is_blank() ? 0 : (t.is_iri() ? 1 : 2); }

struct Compiled {
  // Either a constant or an index into the binding vector.
  struct Pos {
    std::optional<Term> constant;
    std::size_t var = 0;
  };
  std::array<Pos, 3> pos;
};

struct CompiledFilter {
  FilterOp op;
  std::size_t left;
  Compiled::Pos right;
};

class Evaluator {
 public:
  Evaluator(const Graph& g, const SelectQuery& q) : g_(g), vars_(pattern_variables(q)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i].name] = i;
    for (const auto& p : q.patterns) patterns_.push_back(Compiled{{pos(p.subject), pos(p.predicate), pos(p.object)}});
    for (const auto& f : q.filters) filters_.push_back(CompiledFilter{f.op, index_.at(f.left.name), pos(f.right)});
    binding_.resize(vars_.size());
    done_.assign(patterns_.size(), false);
  }

  std::vector<std::vector<Term>> solve(std::size_t& type_errors) {
    search(patterns_.size());
    type_errors = type_errors_;
    return std::move(solutions_);
  }

  std::size_t index(const Variable& v) const { return index_.at(v.name); }

 private:
  Compiled::Pos pos(const Slot& s) const {
    if (const auto* t = std::get_if<Term>(&s)) return {*t, 0};
    return {std::nullopt, index_.at(std::get<Variable>(s).name)};
  }

  std::optional<Term> value(const Compiled::Pos& p) const { return p.constant ? p.constant : binding_[p.var]; }

  // Picks the open pattern with the most bound positions; ties keep source order.
  std::size_t pick() const {
    std::size_t best = patterns_.size();
    int best_bound = -1;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (done_[i]) continue;
      int bound = 0;
      for (const auto& p : patterns_[i].pos) bound += value(p).has_value();
      if (bound > best_bound) {
        best = i;
        best_bound = bound;
      }
    }
    return best;
  }

  bool filters_hold(const std::vector<std::size_t>& fresh) {
    for (const auto& f : filters_) {
      const auto l = binding_[f.left];
      const auto r = value(f.right);
      if (!l || !r) continue;
      // Only check a filter at the step that completes its bindings.
      const bool now = std::find(fresh.begin(), fresh.end(), f.left) != fresh.end() ||
                       (!f.right.constant && std::find(fresh.begin(), fresh.end(), f.right.var) != fresh.end());
      if (!now) continue;
      const auto ok = apply_filter(f.op, *l, *r);
      if (!ok) ++type_errors_;
      if (!ok.value_or(false)) return false;
    }
    return true;
  }

  void search(std::size_t open) {
    if (open == 0) {
      std::vector<Term> row;
      row.reserve(binding_.size());
      for (const auto& b : binding_) row.push_back(*b);
      solutions_.push_back(std::move(row));
      return;
    }
    const std::size_t i = pick();
    const auto& pat = patterns_[i];
    done_[i] = true;
    for (const auto& t : g_.match(value(pat.pos[0]), value(pat.pos[1]), value(pat.pos[2]))) {
      const Term* parts[3] = {&t.subject, &t.predicate, &t.object};
      std::vector<std::size_t> fresh;
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        const auto& p = pat.pos[k];
        if (p.constant) continue;
        if (binding_[p.var]) {
          ok = *binding_[p.var] == *parts[k];  // repeated variable inside one pattern
        } else {
          binding_[p.var] = *parts[k];
          fresh.push_back(p.var);
        }
      }
      if (ok && filters_hold(fresh)) search(open - 1);
      for (auto v : fresh) binding_[v].reset();
    }
    done_[i] = false;
  }

  const Graph& g_;
  std::vector<Variable> vars_;
  std::map<std::string, std::size_t> index_;
  std::vector<Compiled> patterns_;
  std::vector<CompiledFilter> filters_;
  std::vector<std::optional<Term>> binding_;
  std::vector<bool> done_;
  std::vector<std::vector<Term>> solutions_;
  std::size_t type_errors_ = 0;
};

std::vector<std::string> render(const std::vector<Term>& row) {
  std::vector<std::string> out;
  out.reserve(row.size());
  for (const auto& t : row) out.push_back(t.to_ntriples());
  return out;
}

}  // namespace

std::string_view to_string(FilterOp op) {
  switch (op) {
    case FilterOp::kEq: return "=";
    case FilterOp::kNe: return "!=";
    case FilterOp::kLt: return "<";
    case FilterOp::kLe: return "<=";
    case FilterOp::kGt: return ">";
    case FilterOp::kGe: return ">=";
    case FilterOp::kContains: return "contains";
  }
  return "";
}

std::string_view to_string(QueryError::Kind kind) {
  switch (kind) {
    case QueryError::Kind::kSyntax: return "syntax";
    case QueryError::Kind::kUnknownPrefix: return "unknown-prefix";
    case QueryError::Kind::kUnsupportedKeyword: return "unsupported-keyword";
    case QueryError::Kind::kInvalidQuery: return "invalid-query";
  }
  return "";
}

const std::vector<std::string_view>& unsupported_keywords() {
  static const std::vector<std::string_view> k = {
      "ASK",      "BASE",  "BIND",    "CONSTRUCT", "COUNT",  "DELETE", "DESCRIBE", "EXISTS", "FROM",
      "GRAPH",    "GROUP", "HAVING",  "INSERT",    "MINUS",  "NOT",    "OFFSET",   "OPTIONAL", "REDUCED",
      "SERVICE",  "UNION", "VALUES"};
  return k;
}

SelectQuery parse_query(std::string_view text) { return Parser(text).run(); }

std::vector<Variable> pattern_variables(const SelectQuery& q) {
  std::vector<Variable> out;
  for (const auto& p : q.patterns) {
    for (const Slot* s : {&p.subject, &p.predicate, &p.object}) {
      const auto* v = std::get_if<Variable>(s);
      if (v && std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
    }
  }
  return out;
}

int compare_terms(const Term& a, const Term& b) {
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (!a.is_literal()) {
    const int c = a.text().compare(b.text());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const auto na = numeric_value(a), nb = numeric_value(b);
  if (na && nb) {
    if (int c = compare_numeric(*na, *nb)) return c;
  } else if (na || nb) {
    return na ? -1 : 1;
  }
  const auto& la = a.as_literal();
  const auto& lb = b.as_literal();
  if (la < lb) return -1;
  if (lb < la) return 1;
  return 0;
}

std::optional<bool> apply_filter(FilterOp op, const Term& left, const Term& right) {
  const auto nl = numeric_value(left), nr = numeric_value(right);
  switch (op) {
    case FilterOp::kEq:
    case FilterOp::kNe: {
      const bool eq = (nl && nr) ? compare_numeric(*nl, *nr) == 0 : left == right;
      return op == FilterOp::kEq ? eq : !eq;
    }
    case FilterOp::kContains:
      if (!left.is_literal() || !right.is_literal()) return std::nullopt;
      return left.as_literal().lexical().find(right.as_literal().lexical()) != std::string::npos;
    default:
      break;
  }
  int c = 0;
  if (nl && nr) {
    c = compare_numeric(*nl, *nr);
  } else if (is_stringish(left) && is_stringish(right)) {
    c = left.as_literal().lexical().compare(right.as_literal().lexical());
  } else {
    return std::nullopt;
  }
  switch (op) {
    case FilterOp::kLt: return c < 0;
    case FilterOp::kLe: return c <= 0;
    case FilterOp::kGt: return c > 0;
    case FilterOp::kGe: return c >= 0;
    default: return std::nullopt;
  }
}

ResultSet evaluate(const Graph& g, const SelectQuery& q) {
  ResultSet rs;
  for (const auto& v : q.projected) rs.columns.push_back(v.name);
  Evaluator ev(g, q);
  auto solutions = ev.solve(rs.type_errors);

  std::vector<std::size_t> proj;
  for (const auto& v : q.projected) proj.push_back(ev.index(v));

  struct Row {
    std::optional<Term> key;
    std::vector<Term> terms;
    std::vector<std::string> rendered;
  };
  std::vector<Row> rows;
  rows.reserve(solutions.size());
  for (auto& s : solutions) {
    Row r;
    if (q.order_by) r.key = s[ev.index(q.order_by->var)];
    for (auto i : proj) r.terms.push_back(s[i]);
    r.rendered = render(r.terms);
    rows.push_back(std::move(r));
  }
  const bool desc = q.order_by && q.order_by->direction == Direction::kDesc;
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.key && b.key) {
      if (int c = compare_terms(*a.key, *b.key)) return desc ? c > 0 : c < 0;
    }
    return a.rendered < b.rendered;
  });

  std::set<std::vector<std::string>> seen;
  for (auto& r : rows) {
    if (q.limit && rs.rows.size() >= *q.limit) break;
    if (q.distinct && !seen.insert(r.rendered).second) continue;
    rs.rows.push_back(std::move(r.terms));
  }
  return rs;
}

}  // namespace dmcc::query
