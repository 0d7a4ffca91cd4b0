#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psmod {

enum class ErrorKind {
  DomainMismatch,
  InvalidArgument,
  InvalidDivisor,
  UnsupportedEnumeration,
  Unsupported,
  RankMismatch,
  NotPrimal,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind` is stable and is what the CLI
/// maps onto exit codes and JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax or semantic error in textual input, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::Parse, what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace psmod
