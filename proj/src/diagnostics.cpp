#include "gste/diagnostics.hpp"

#include <cstdio>

namespace gste {

std::string code_name(DiagCode code) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "E%03d", static_cast<int>(code));
  return buf;
}

namespace {

std::string what_text(const Diagnostic& d) {
  return format_diagnostic(d, "<input>");
}

}  // namespace

ParseError::ParseError(Diagnostic diag) : std::runtime_error(what_text(diag)), diag_(std::move(diag)) {}

void fail(DiagCode code, int line, int column, std::string message) {
  throw ParseError(Diagnostic{code, line, column, std::move(message)});
}

std::string format_diagnostic(const Diagnostic& diag, std::string_view origin) {
  std::string out(origin);
  if (diag.line > 0) {
    out += ':' + std::to_string(diag.line);
    if (diag.column > 0) out += ':' + std::to_string(diag.column);
  }
  out += ": error[" + code_name(diag.code) + "]: " + diag.message;
  return out;
}

}  // namespace gste
