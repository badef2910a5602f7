#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwl/document.hpp"
#include "cwl/ideal.hpp"

namespace cwl::testing {

inline Ring ring_of(std::string_view names) {
  return parse(std::string("ring ") + std::string(names) + ";").ring;
}

inline MonomialIdeal I(const Ring& ring, std::string_view gens) { return parse_ideal(gens, ring); }

inline Monomial T(const Ring& ring, std::string_view term) { return parse_term(term, ring); }

/// Malformed documents and the error code each must produce.
inline const std::vector<std::pair<std::string, ErrorCode>>& malformed_inputs() {
  static const std::vector<std::pair<std::string, ErrorCode>> cases = {
      {"ideal I = x^3;", ErrorCode::ParseMissingRing},
      {"", ErrorCode::ParseMissingRing},
      {"# only a comment\n", ErrorCode::ParseMissingRing},
      {"ring x y; ideal I = x$y;", ErrorCode::ParseLexical},
      {"ring x y; ideal I = x^99999999999999999999;", ErrorCode::ParseLexical},
      {"ring x y; ideal I = x @ y;", ErrorCode::ParseLexical},
      {"ring x y; ideal I = x^3, x*y", ErrorCode::ParseSyntax},
      {"ring x y; ideal I = x2y;", ErrorCode::ParseSemantic},
      {"ring x y; ideal I = x y;", ErrorCode::ParseSyntax},
      {"ring x y; ideal I = 3*x;", ErrorCode::ParseSyntax},
      {"ring x y; ideal I = x^;", ErrorCode::ParseSyntax},
      {"ring x y; ideal = x;", ErrorCode::ParseSyntax},
      {"ring; ideal I = x;", ErrorCode::ParseSyntax},
      {"ring x y; ideal I = z;", ErrorCode::ParseSemantic},
      {"ring x y; ideal x = y;", ErrorCode::ParseSemantic},
      {"ring x y; ideal I = x; ideal I = y;", ErrorCode::ParseSemantic},
      {"ring x x;", ErrorCode::ParseSemantic},
      {"ring x y; fullset L = { x^2 };", ErrorCode::ParseSemantic},
      {"ring x y; fullset L = { x }; assign L[y] = y;", ErrorCode::ParseSemantic},
      {"ring x y; ideal I = x; expect nosuch(I) = true;", ErrorCode::ParseSemantic},
      {"ring x y; ideal I = x; expect cwl(K) = true;", ErrorCode::ParseSemantic},
      {"ring x y; ring x y;", ErrorCode::ParseSemantic},
  };
  return cases;
}

}  // namespace cwl::testing

namespace cwl {

// gtest printers.
inline void PrintTo(const MonomialIdeal& i, std::ostream* os) { *os << "(" << to_string(i) << ")"; }
inline void PrintTo(const Monomial& m, std::ostream* os) {
  *os << "[";
  for (std::size_t k = 0; k < m.arity(); ++k) *os << (k ? " " : "") << m[k];
  *os << "]";
}

}  // namespace cwl
