#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elhgeo {

enum class ErrorKind {
  InvalidName,
  BottomNotSupported,
  TopNotSupported,
  NotNormalized,
  NotNormalFormAxiom,
  UnknownName,
  UnknownElement,
  DimensionMismatch,
  SignatureMismatch,
  InvalidArgument,
  Format,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace elhgeo
