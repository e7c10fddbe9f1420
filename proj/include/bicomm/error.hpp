#pragma once

#include <stdexcept>
#include <string>

namespace bicomm {

enum class ErrorCode {
  DivisionByZero,
  InvalidField,
  FieldMismatch,
  Syntax,
  AmbiguousProduct,
  BadIndex,
  InvalidIndexMap,
  NoWeight,
  UnsupportedGenerator,
  BadChain,
  WindowTooSmall,
  NotDominated,
  WrongCharacteristic,
  BadElement,
  NotMultilinear,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures remember where they happened (1-based).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, int line, int column)
      : Error(code, what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bicomm
