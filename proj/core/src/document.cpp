#include "cwl/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>

#include "cwl/criteria.hpp"
#include "cwl/dim2.hpp"
#include "cwl/resolution.hpp"
#include "cwl/verify.hpp"

namespace cwl {

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Int, Punct, Trivia, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  long long value = 0;
};

// Splits the input into tokens. Comment lines and blank lines become
// Trivia tokens so the parser can keep them.
std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, pos = 0;
  bool line_has_code = false;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
        line_has_code = false;
      } else {
        ++col;
      }
      ++pos;
    }
  };
  while (pos < src.size()) {
    const char c = src[pos];
    if (c == '\n') {
      if (!line_has_code && col == 1) out.push_back({Tok::Trivia, "", line, col});
      advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      const std::size_t end = src.find('\n', pos);
      const std::size_t stop = end == std::string_view::npos ? src.size() : end;
      std::string text(src.substr(pos, stop - pos));
      while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
      out.push_back({Tok::Trivia, text, line, col});
      advance(stop - pos);
      if (pos < src.size()) advance(1);
      continue;
    }
    line_has_code = true;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos;
      while (end < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
        ++end;
      out.push_back({Tok::Ident, std::string(src.substr(pos, end - pos)), line, col});
      advance(end - pos);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos;
      while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
      Token t{Tok::Int, std::string(src.substr(pos, end - pos)), line, col};
      const auto [ptr, ec] = std::from_chars(src.data() + pos, src.data() + end, t.value);
      if (ec != std::errc() || ptr != src.data() + end)
        throw ParseError(ErrorCode::ParseLexical, line, col, "integer out of range");
      out.push_back(t);
      advance(end - pos);
      continue;
    }
    if (std::string_view(";,=*^{}[]()").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), line, col});
      advance(1);
      continue;
    }
    throw ParseError(ErrorCode::ParseLexical, line, col,
                     std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_word_value(const std::string& w) {
  return w == "true" || w == "false" || w == "inconclusive" || w == "inapplicable" ||
         w == "precondition";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  IdealDocument document() {
    auto trivia = take_trivia();
    const Token& first = peek();
    if (first.kind != Tok::Ident || first.text != "ring") {
      if (first.kind == Tok::End)
        throw ParseError(ErrorCode::ParseMissingRing, first.line, first.column,
                         "missing ring declaration");
      if (first.kind == Tok::Ident &&
          (first.text == "ideal" || first.text == "fullset" || first.text == "assign" ||
           first.text == "expect"))
        throw ParseError(ErrorCode::ParseMissingRing, first.line, first.column,
                         "'" + first.text + "' before any ring declaration");
      throw syntax(first, "expected 'ring'");
    }
    next();
    std::vector<std::string> names;
    std::set<std::string> seen;
    while (peek().kind == Tok::Ident) {
      const Token& t = next();
      if (!seen.insert(t.text).second)
        throw ParseError(ErrorCode::ParseSemantic, t.line, t.column,
                         "variable '" + t.text + "' declared twice");
      if (is_keyword(t.text))
        throw ParseError(ErrorCode::ParseSemantic, t.line, t.column,
                         "'" + t.text + "' is reserved");
      names.push_back(t.text);
    }
    if (names.empty()) throw syntax(peek(), "expected at least one variable");
    if (names.size() > kMaxArity)
      throw ParseError(ErrorCode::ParseSemantic, first.line, first.column,
                       "too many variables (at most " + std::to_string(kMaxArity) + ")");
    expect(";");
    IdealDocument doc{Ring(names), std::move(trivia), {}, {}};
    ring_ = &doc.ring;
    doc_ = &doc;

    while (true) {
      auto pre = take_trivia();
      const Token& t = peek();
      if (t.kind == Tok::End) {
        doc.trailing_trivia = std::move(pre);
        break;
      }
      if (t.kind != Tok::Ident) throw syntax(t, "expected a statement");
      Statement st{std::move(pre), statement(), t.line};
      doc.statements.push_back(std::move(st));
    }
    return doc;
  }

  Monomial lone_term(const Ring& ring) {
    ring_ = &ring;
    skip_trivia();
    Monomial m = term();
    skip_trivia();
    if (peek().kind != Tok::End) throw syntax(peek(), "trailing input after term");
    return m;
  }

  MonomialIdeal lone_ideal(const Ring& ring) {
    ring_ = &ring;
    skip_trivia();
    MonomialIdeal i = ideal_expr();
    skip_trivia();
    if (peek().kind != Tok::End) throw syntax(peek(), "trailing input after ideal");
    return i;
  }

 private:
  static bool is_keyword(const std::string& s) {
    return s == "ring" || s == "ideal" || s == "fullset" || s == "assign" || s == "expect";
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  std::vector<std::string> take_trivia() {
    std::vector<std::string> out;
    while (peek().kind == Tok::Trivia) out.push_back(next().text);
    return out;
  }
  void skip_trivia() {
    while (peek().kind == Tok::Trivia) ++pos_;
  }

  static ParseError syntax(const Token& t, const std::string& what) {
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    return ParseError(ErrorCode::ParseSyntax, t.line, t.column, what + ", found " + found);
  }
  static ParseError semantic(const Token& t, const std::string& what) {
    return ParseError(ErrorCode::ParseSemantic, t.line, t.column, what);
  }

  bool at(const char* punct) const {
    skip_inline();
    return peek().kind == Tok::Punct && peek().text == punct;
  }
  void skip_inline() const {
    while (toks_[pos_].kind == Tok::Trivia) ++pos_;
  }
  const Token& expect(const char* punct) {
    skip_inline();
    if (!at(punct)) throw syntax(peek(), std::string("expected '") + punct + "'");
    return next();
  }
  const Token& expect_ident(const char* what) {
    skip_inline();
    if (peek().kind != Tok::Ident) throw syntax(peek(), std::string("expected ") + what);
    return next();
  }

  std::variant<IdealDecl, FullsetDecl, AssignDecl, Expectation> statement() {
    const Token& kw = next();
    if (kw.text == "ring") throw semantic(kw, "ring declared twice");
    if (kw.text == "ideal") return ideal_decl();
    if (kw.text == "fullset") return fullset_decl();
    if (kw.text == "assign") return assign_decl();
    if (kw.text == "expect") return expectation();
    throw syntax(kw, "expected 'ideal', 'fullset', 'assign' or 'expect'");
  }

  const Token& new_name() {
    const Token& t = expect_ident("a name");
    if (ring_->index_of(t.text)) throw semantic(t, "name '" + t.text + "' is a ring variable");
    if (is_keyword(t.text)) throw semantic(t, "'" + t.text + "' is reserved");
    if (names_.count(t.text)) throw semantic(t, "name '" + t.text + "' already defined");
    return t;
  }

  IdealDecl ideal_decl() {
    const Token& name = new_name();
    expect("=");
    MonomialIdeal ideal = ideal_expr();
    expect(";");
    names_[name.text] = Kind::Ideal;
    return IdealDecl{name.text, std::move(ideal)};
  }

  FullsetDecl fullset_decl() {
    const Token& name = new_name();
    expect("=");
    expect("{");
    std::vector<Monomial> elements;
    if (!at("}")) {
      while (true) {
        skip_inline();
        const Token& start = peek();
        Monomial m = term();
        if (m.is_unit() || !m.is_squarefree())
          throw semantic(start, "full set elements must be squarefree non-unit monomials");
        elements.push_back(m);
        if (!at(",")) break;
        next();
      }
    }
    expect("}");
    expect(";");
    names_[name.text] = Kind::Fullset;
    return FullsetDecl{name.text, SquarefreeSet(*ring_, std::move(elements))};
  }

  AssignDecl assign_decl() {
    const Token& name = expect_ident("a full set name");
    const auto it = names_.find(name.text);
    if (it == names_.end() || it->second != Kind::Fullset)
      throw semantic(name, "'" + name.text + "' is not a declared full set");
    expect("[");
    skip_inline();
    const Token& key_tok = peek();
    Monomial key = term();
    expect("]");
    if (!doc_->fullset(name.text)->contains(key))
      throw semantic(key_tok, "'" + to_string(key, *ring_) + "' is not in " + name.text);
    if (!assigned_.insert({name.text, to_string(key, *ring_)}).second)
      throw semantic(key_tok, "'" + to_string(key, *ring_) + "' assigned twice");
    expect("=");
    MonomialIdeal ideal = ideal_expr();
    expect(";");
    return AssignDecl{name.text, key, std::move(ideal)};
  }

  Expectation expectation() {
    const Token& check = expect_ident("a check name");
    const auto& known = expectation_checks();
    if (std::find(known.begin(), known.end(), check.text) == known.end())
      throw semantic(check, "unknown check '" + check.text + "'");
    Expectation e;
    e.check = check.text;
    expect("(");
    if (!at(")")) {
      while (true) {
        e.args.push_back(argument());
        if (!at(",")) break;
        next();
      }
    }
    expect(")");
    expect("=");
    e.expected = value();
    expect(";");
    return e;
  }

  ExpectArg argument() {
    skip_inline();
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      next();
      if (at("*") || at("^")) throw syntax(peek(), "numeric coefficients are not allowed");
      return ExpectArg{t.value};
    }
    if (t.kind == Tok::Ident && names_.count(t.text)) {
      next();
      return ExpectArg{t.text};
    }
    if (t.kind == Tok::Ident && !ring_->index_of(t.text))
      throw semantic(t, "unknown name '" + t.text + "'");
    return ExpectArg{term()};
  }

  ExpectValue value() {
    skip_inline();
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      if (!is_word_value(t.text)) throw syntax(t, "expected a value");
      next();
      return ExpectValue{t.text};
    }
    if (t.kind == Tok::Int) {
      next();
      return ExpectValue{t.value};
    }
    if (at("(")) {
      next();
      MonomialIdeal i = ideal_expr();
      expect(")");
      return ExpectValue{std::move(i)};
    }
    if (at("[")) {
      next();
      std::vector<Monomial> list;
      if (!at("]")) {
        while (true) {
          list.push_back(term());
          if (!at(",")) break;
          next();
        }
      }
      expect("]");
      return ExpectValue{std::move(list)};
    }
    throw syntax(t, "expected a value");
  }

  // `0`, `1` or a comma-separated list of terms.
  MonomialIdeal ideal_expr() {
    skip_inline();
    if (peek().kind == Tok::Int && peek().value == 0) {
      next();
      return MonomialIdeal::zero(*ring_);
    }
    std::vector<Monomial> gens;
    while (true) {
      gens.push_back(term());
      if (!at(",")) break;
      next();
    }
    return MonomialIdeal(*ring_, std::move(gens));
  }

  Monomial term() {
    skip_inline();
    const Token& start = peek();
    if (start.kind == Tok::Int) {
      if (start.value != 1) throw syntax(start, "numeric coefficients are not allowed");
      next();
      if (at("*") || at("^")) throw syntax(peek(), "numeric coefficients are not allowed");
      return Monomial(ring_->arity());
    }
    std::vector<std::uint64_t> exps(ring_->arity(), 0);
    while (true) {
      const Token& var = expect_ident("a variable");
      const auto idx = ring_->index_of(var.text);
      if (!idx) {
        if (names_.count(var.text))
          throw semantic(var, "'" + var.text + "' is a name, not a variable");
        throw semantic(var, "unknown variable '" + var.text + "'");
      }
      std::uint64_t e = 1;
      if (at("^")) {
        next();
        skip_inline();
        const Token& num = peek();
        if (num.kind != Tok::Int) throw syntax(num, "expected an exponent");
        next();
        e = static_cast<std::uint64_t>(num.value);
      }
      exps[*idx] += e;
      if (exps[*idx] > kMaxDegree) throw semantic(var, "exponent too large");
      if (!at("*")) break;
      next();
    }
    std::uint64_t total = 0;
    for (auto e : exps) total += e;
    if (total > kMaxDegree) throw semantic(start, "degree too large");
    std::vector<Exponent> small(exps.begin(), exps.end());
    return Monomial(std::span<const Exponent>(small));
  }

  enum class Kind { Ideal, Fullset };

  std::vector<Token> toks_;
  mutable std::size_t pos_ = 0;
  const Ring* ring_ = nullptr;
  const IdealDocument* doc_ = nullptr;
  std::map<std::string, Kind> names_;
  std::set<std::pair<std::string, std::string>> assigned_;
};

std::string term_list(const std::vector<Monomial>& terms, const Ring& ring) {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out += ", ";
    out += to_string(terms[k], ring);
  }
  return out;
}

}  // namespace

const MonomialIdeal* IdealDocument::ideal(std::string_view name) const {
  for (const auto& st : statements)
    if (const auto* d = std::get_if<IdealDecl>(&st.body); d && d->name == name) return &d->ideal;
  return nullptr;
}

const SquarefreeSet* IdealDocument::fullset(std::string_view name) const {
  for (const auto& st : statements)
    if (const auto* d = std::get_if<FullsetDecl>(&st.body); d && d->name == name) return &d->set;
  return nullptr;
}

Assignment IdealDocument::assignment(std::string_view name) const {
  Assignment out;
  for (const auto& st : statements)
    if (const auto* d = std::get_if<AssignDecl>(&st.body); d && d->set == name)
      out.insert_or_assign(d->key, d->ideal);
  return out;
}

std::vector<const Expectation*> IdealDocument::expectations() const {
  std::vector<const Expectation*> out;
  for (const auto& st : statements)
    if (const auto* e = std::get_if<Expectation>(&st.body)) out.push_back(e);
  return out;
}

IdealDocument parse(std::string_view text) { return Parser(text).document(); }

Monomial parse_term(std::string_view text, const Ring& ring) {
  return Parser(text).lone_term(ring);
}

MonomialIdeal parse_ideal(std::string_view text, const Ring& ring) {
  return Parser(text).lone_ideal(ring);
}

std::string to_string(const ExpectValue& value, const Ring& ring) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, MonomialIdeal>) return "(" + to_string(v) + ")";
        else return "[" + term_list(v, ring) + "]";
      },
      value.value);
}

std::string to_string(const Expectation& e, const Ring& ring) {
  std::string out = e.check + "(";
  for (std::size_t k = 0; k < e.args.size(); ++k) {
    if (k) out += ", ";
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, long long>) out += std::to_string(v);
          else if constexpr (std::is_same_v<T, std::string>) out += v;
          else out += to_string(v, ring);
        },
        e.args[k].value);
  }
  return out + ") = " + to_string(e.expected, ring);
}

std::string print(const IdealDocument& doc) {
  std::string out;
  auto trivia = [&](const std::vector<std::string>& lines) {
    for (const auto& l : lines) out += l + "\n";
  };
  trivia(doc.ring_trivia);
  out += "ring";
  for (const auto& n : doc.ring.names()) out += " " + n;
  out += ";\n";
  for (const auto& st : doc.statements) {
    trivia(st.trivia);
    std::visit(
        [&](const auto& b) {
          using T = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<T, IdealDecl>) {
            out += "ideal " + b.name + " = " + to_string(b.ideal) + ";\n";
          } else if constexpr (std::is_same_v<T, FullsetDecl>) {
            out += "fullset " + b.name + " = { " + term_list(b.set.elements(), doc.ring) + " };\n";
          } else if constexpr (std::is_same_v<T, AssignDecl>) {
            out += "assign " + b.set + "[" + to_string(b.key, doc.ring) + "] = " +
                   to_string(b.ideal) + ";\n";
          } else {
            out += "expect " + to_string(b, doc.ring) + ";\n";
          }
        },
        st.body);
  }
  trivia(doc.trailing_trivia);
  return out;
}

// ---------------------------------------------------------------------------
// Expectation evaluation

namespace {

struct Args {
  const IdealDocument& doc;
  const Expectation& e;

  const ExpectArg& at(std::size_t k) const {
    if (k >= e.args.size())
      throw Error(ErrorCode::InvalidArgument, e.check + ": missing argument " + std::to_string(k + 1));
    return e.args[k];
  }
  const MonomialIdeal& ideal(std::size_t k) const {
    const auto* name = std::get_if<std::string>(&at(k).value);
    const MonomialIdeal* i = name ? doc.ideal(*name) : nullptr;
    if (!i) throw Error(ErrorCode::InvalidArgument, e.check + ": argument " + std::to_string(k + 1) + " must name an ideal");
    return *i;
  }
  const SquarefreeSet& fullset(std::size_t k) const {
    const auto* name = std::get_if<std::string>(&at(k).value);
    const SquarefreeSet* s = name ? doc.fullset(*name) : nullptr;
    if (!s) throw Error(ErrorCode::InvalidArgument, e.check + ": argument " + std::to_string(k + 1) + " must name a full set");
    return *s;
  }
  Assignment assignment(std::size_t k) const {
    return doc.assignment(std::get<std::string>(at(k).value));
  }
  long long integer(std::size_t k) const {
    const auto* v = std::get_if<long long>(&at(k).value);
    if (!v) throw Error(ErrorCode::InvalidArgument, e.check + ": argument " + std::to_string(k + 1) + " must be an integer");
    return *v;
  }
  Monomial term(std::size_t k) const {
    if (const auto* v = std::get_if<Monomial>(&at(k).value)) return *v;
    if (const auto* v = std::get_if<long long>(&at(k).value); v && *v == 1)
      return Monomial(doc.ring.arity());
    throw Error(ErrorCode::InvalidArgument, e.check + ": argument " + std::to_string(k + 1) + " must be a term");
  }
};

ExpectValue word(bool b) { return ExpectValue{std::string(b ? "true" : "false")}; }
ExpectValue word(const Verdict& v) {
  return ExpectValue{std::string(v.applicable ? to_string(v.conclusion) : "inapplicable")};
}
ExpectValue number(long long n) { return ExpectValue{n}; }
ExpectValue ideal_value(MonomialIdeal i) { return ExpectValue{std::move(i)}; }

using Check = std::function<ExpectValue(const Args&)>;

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table = {
      {"cwl", [](const Args& a) { return word(is_componentwise_linear(a.ideal(0))); }},
      {"linear", [](const Args& a) { return word(has_linear_resolution(a.ideal(0))); }},
      {"reg", [](const Args& a) { return number(regularity(a.ideal(0)).reg); }},
      {"pd", [](const Args& a) { return number(regularity(a.ideal(0)).pd); }},
      {"order", [](const Args& a) { return number(static_cast<long long>(order(a.ideal(0)))); }},
      {"mu", [](const Args& a) { return number(static_cast<long long>(a.ideal(0).mu())); }},
      {"betti",
       [](const Args& a) {
         return number(static_cast<long long>(
             betti(a.ideal(0)).total(static_cast<unsigned>(a.integer(1)))));
       }},
      {"graded_betti",
       [](const Args& a) {
         return number(static_cast<long long>(betti(a.ideal(0)).graded(
             static_cast<unsigned>(a.integer(1)), static_cast<std::uint64_t>(a.integer(2)))));
       }},
      {"intersect", [](const Args& a) { return ideal_value(intersect(a.ideal(0), a.ideal(1))); }},
      {"sum", [](const Args& a) { return ideal_value(sum(a.ideal(0), a.ideal(1))); }},
      {"product", [](const Args& a) { return ideal_value(product(a.ideal(0), a.ideal(1))); }},
      {"colon", [](const Args& a) { return ideal_value(colon(a.ideal(0), a.ideal(1))); }},
      {"colon_by", [](const Args& a) { return ideal_value(colon(a.ideal(0), a.term(1))); }},
      {"colon_m", [](const Args& a) { return ideal_value(colon_maximal(a.ideal(0))); }},
      {"sum_colon_m",
       [](const Args& a) {
         return ideal_value(sum(colon_maximal(a.ideal(0)), colon_maximal(a.ideal(1))));
       }},
      {"meet_order",
       [](const Args& a) {
         return number(static_cast<long long>(order(intersect(a.ideal(0), a.ideal(1)))));
       }},
      {"colon_z_dim",
       [](const Args& a) {
         const auto d = static_cast<std::uint64_t>(a.integer(1));
         return number(static_cast<long long>(graded_colon_linear(a.ideal(0), d).at(d)));
       }},
      {"component",
       [](const Args& a) {
         return ideal_value(component(a.ideal(0), static_cast<std::uint64_t>(a.integer(1))));
       }},
      {"power", [](const Args& a) { return ideal_value(power(a.ideal(0), a.integer(1))); }},
      {"oracle_intersect",
       [](const Args& a) {
         return ideal_value(oracle_op(OracleKind::Intersect, a.ideal(0), a.ideal(1),
                                      static_cast<std::uint64_t>(a.integer(2))));
       }},
      {"oracle_colon_by",
       [](const Args& a) {
         return ideal_value(oracle_op(OracleKind::Colon, a.ideal(0), a.term(1),
                                      static_cast<std::uint64_t>(a.integer(2))));
       }},
      {"lin_lin",
       [](const Args& a) { return word(check_lin_plus_lin(a.ideal(0), a.ideal(1), a.integer(2))); }},
      {"cwl_linear", [](const Args& a) { return word(check_cwl_plus_linear(a.ideal(0), a.ideal(1))); }},
      {"componentwise",
       [](const Args& a) { return word(check_componentwise_criterion(a.ideal(0), a.ideal(1))); }},
      {"m_power", [](const Args& a) { return word(check_m_power_criterion(a.ideal(0), a.ideal(1))); }},
      {"prime_product",
       [](const Args& a) { return word(check_prime_product(a.term(0).support_mask(), a.ideal(1))); }},
      {"nj_sum", [](const Args& a) { return word(check_nJ_sum(a.ideal(0), a.ideal(1))); }},
      {"full_sum", [](const Args& a) { return word(full_sum_verdict(a.ideal(0), a.ideal(1))); }},
      {"mu_additive", [](const Args& a) { return word(mu_additive_verdict(a.ideal(0), a.ideal(1))); }},
      {"order_length",
       [](const Args& a) { return word(order_length_formula(a.ideal(0), a.ideal(1))); }},
      {"reg_plus_one",
       [](const Args& a) { return word(reg_plus_one_verdict(a.ideal(0), a.ideal(1))); }},
      {"rpo_left",
       [](const Args& a) {
         return ideal_value(reg_plus_one_colons(a.ideal(0), a.ideal(1), a.integer(2)).first);
       }},
      {"rpo_right",
       [](const Args& a) {
         return ideal_value(reg_plus_one_colons(a.ideal(0), a.ideal(1), a.integer(2)).second);
       }},
      {"linear_colon", [](const Args& a) { return word(linear_colon_tests(a.ideal(0), a.term(1))); }},
      {"full", [](const Args& a) { return word(fullness_checks(a.ideal(0))); }},
      {"m_full", [](const Args& a) { return word(*fullness_checks(a.ideal(0)).flag("m_full")); }},
      {"order_of",
       [](const Args& a) {
         const auto cert = cwl_ordering(a.ideal(0));
         if (!cert.ok()) return ExpectValue{std::string("false")};
         return ExpectValue{cert.order};
       }},
      {"certificate",
       [](const Args& a) { return word(validate_certificate(cwl_ordering(a.ideal(0)))); }},
      {"is_full", [](const Args& a) { return word(is_full(a.fullset(0))); }},
      {"valid",
       [](const Args& a) { return word(validate_assignment(a.fullset(0), a.assignment(0))); }},
      {"assemble",
       [](const Args& a) { return ideal_value(assemble(a.fullset(0), a.assignment(0))); }},
      {"assemble_forced",
       [](const Args& a) { return ideal_value(assemble(a.fullset(0), a.assignment(0), true)); }},
      {"intersection_identity",
       [](const Args& a) {
         return word(check_intersection_identity(a.fullset(0), a.assignment(0)));
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& expectation_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : checks()) out.push_back(name);
    return out;
  }();
  return names;
}

ExpectValue evaluate(const IdealDocument& doc, const Expectation& expectation) {
  const auto it = checks().find(expectation.check);
  if (it == checks().end())
    throw Error(ErrorCode::InvalidArgument, "unknown check '" + expectation.check + "'");
  try {
    return it->second(Args{doc, expectation});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Precondition) return ExpectValue{std::string("precondition")};
    throw;
  }
}

}  // namespace cwl
