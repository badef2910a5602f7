#include "cwl/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cwl/error.hpp"

namespace cwl {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedRing: return "mixed-ring";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::ZeroIdeal: return "zero-ideal";
    case ErrorCode::UnitIdeal: return "unit-ideal";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::ParseLexical: return "parse-lexical";
    case ErrorCode::ParseSyntax: return "parse-syntax";
    case ErrorCode::ParseSemantic: return "parse-semantic";
    case ErrorCode::ParseMissingRing: return "parse-missing-ring";
    case ErrorCode::OracleBound: return "oracle-bound";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> names) {
  if (names.empty())
    throw Error(ErrorCode::InvalidArgument, "ring needs at least one variable");
  if (names.size() > kMaxArity)
    throw Error(ErrorCode::InvalidArgument,
                "ring arity " + std::to_string(names.size()) + " exceeds " +
                    std::to_string(kMaxArity));
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n))
      throw Error(ErrorCode::InvalidArgument, "bad variable name '" + n + "'");
    if (!seen.insert(n).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Ring Ring::standard(std::size_t arity) {
  static const char* kSmall[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i)
    names.push_back(arity <= 3 ? std::string(kSmall[i]) : "x" + std::to_string(i + 1));
  return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw Error(ErrorCode::MixedRing, "operands live in different rings");
}

}  // namespace cwl
