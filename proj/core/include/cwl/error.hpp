#pragma once

#include <stdexcept>
#include <string>

namespace cwl {

enum class ErrorCode {
  MixedRing,
  InvalidArgument,
  ZeroIdeal,
  UnitIdeal,
  Precondition,
  Overflow,
  ParseLexical,
  ParseSyntax,
  ParseSemantic,
  ParseMissingRing,
  OracleBound,
  Internal,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable and is what the
/// CLI maps onto exit codes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_parse_error() const noexcept {
    return code_ == ErrorCode::ParseLexical || code_ == ErrorCode::ParseSyntax ||
           code_ == ErrorCode::ParseSemantic ||
           code_ == ErrorCode::ParseMissingRing;
  }

 private:
  ErrorCode code_;
};

}  // namespace cwl
