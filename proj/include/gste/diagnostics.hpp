#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gste {

/// Stable diagnostic codes. Each parse/validation failure maps to exactly one.
enum class DiagCode {
  Syntax = 1,
  DuplicateDriver = 2,
  UndeclaredNode = 3,
  CombinationalCycle = 4,
  UnknownConstant = 5,
  NextInGtel = 6,
  UnknownVertex = 7,
  Unreachable = 8,
  MissingInit = 9,
  DuplicateDeclaration = 10,
};

/// "E001" style rendering of a code.
std::string code_name(DiagCode code);

struct Diagnostic {
  DiagCode code = DiagCode::Syntax;
  int line = 0;    // 1-based; 0 when not tied to a line
  int column = 0;  // 1-based; 0 when not tied to a column
  std::string message;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(Diagnostic diag);

  const Diagnostic& diagnostic() const noexcept { return diag_; }
  DiagCode code() const noexcept { return diag_.code; }

 private:
  Diagnostic diag_;
};

/// A configured size limit (constants, enumeration slots) was exceeded.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(DiagCode code, int line, int column, std::string message);

/// "<origin>:<line>:<col>: error[E00n]: message"
std::string format_diagnostic(const Diagnostic& diag, std::string_view origin);

}  // namespace gste
