#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cwl/error.hpp"
#include "cwl/fullset.hpp"
#include "cwl/ideal.hpp"

namespace cwl {

/// Text format:
///
///   # comment
///   ring x y z;
///   ideal I = x^3, x*y, y^3;        (also `0` and `1`)
///   fullset L = { x, x*y };
///   assign L[x] = x^2, x*y;
///   expect full_sum(I, J) = true;
///
/// Terms are products of `var` or `var^int` joined by `*`. Ideal and full
/// set names may not coincide with variables. Comment and blank lines are
/// kept with the statement that follows them so that printing a parsed
/// document reproduces it.

/// Error raised by `parse`, carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct IdealDecl {
  std::string name;
  MonomialIdeal ideal;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct FullsetDecl {
  std::string name;
  SquarefreeSet set;
  friend bool operator==(const FullsetDecl&, const FullsetDecl&) = default;
};

struct AssignDecl {
  std::string set;
  Monomial key;
  MonomialIdeal ideal;
  friend bool operator==(const AssignDecl&, const AssignDecl&) = default;
};

/// Argument of an expectation: integer, declared name or term.
struct ExpectArg {
  std::variant<long long, std::string, Monomial> value;
  friend bool operator==(const ExpectArg&, const ExpectArg&) = default;
};

/// Expected value: a word (true, false, inconclusive, inapplicable,
/// precondition), an integer, an ideal `(t, ...)` or an ordered list
/// `[t, ...]`.
struct ExpectValue {
  std::variant<std::string, long long, MonomialIdeal, std::vector<Monomial>> value;
  friend bool operator==(const ExpectValue&, const ExpectValue&) = default;
};

struct Expectation {
  std::string check;
  std::vector<ExpectArg> args;
  ExpectValue expected;
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct Statement {
  /// Comment lines (including '#') and blank lines ("") before the statement.
  std::vector<std::string> trivia;
  std::variant<IdealDecl, FullsetDecl, AssignDecl, Expectation> body;
  /// 1-based source line of the statement keyword (0 when built in code).
  std::size_t line = 0;

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.trivia == b.trivia && a.body == b.body;
  }
};

struct IdealDocument {
  Ring ring;
  std::vector<std::string> ring_trivia;
  std::vector<Statement> statements;
  std::vector<std::string> trailing_trivia;

  const MonomialIdeal* ideal(std::string_view name) const;
  const SquarefreeSet* fullset(std::string_view name) const;
  /// Assignments made to the named full set, in source order.
  Assignment assignment(std::string_view name) const;
  std::vector<const Expectation*> expectations() const;

  friend bool operator==(const IdealDocument&, const IdealDocument&) = default;
};

/// Throws ParseError with code ParseLexical, ParseSyntax, ParseSemantic or
/// ParseMissingRing.
IdealDocument parse(std::string_view text);

std::string print(const IdealDocument& doc);

/// Parses a bare term such as `x^2*y` against a ring.
Monomial parse_term(std::string_view text, const Ring& ring);
/// Parses a term list (or `0` / `1`) against a ring.
MonomialIdeal parse_ideal(std::string_view text, const Ring& ring);

std::string to_string(const ExpectValue& value, const Ring& ring);
std::string to_string(const Expectation& expectation, const Ring& ring);

/// Names of the checks an expectation may use.
const std::vector<std::string>& expectation_checks();

/// Runs the check named by an expectation. A Precondition error from the
/// check becomes the word "precondition".
ExpectValue evaluate(const IdealDocument& doc, const Expectation& expectation);

}  // namespace cwl
