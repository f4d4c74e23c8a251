#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace umpf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection of a function definition. Errors raised while validating a
/// segment list carry the segment index; the DSL parser adds line/column.
class FunctionError : public Error {
 public:
  FunctionError(std::string kind, std::string message, std::optional<size_t> segment = {})
      : Error(message), kind_(std::move(kind)), message_(std::move(message)), segment_(segment) {}

  const std::string& kind() const { return kind_; }
  const std::string& message() const { return message_; }
  std::optional<size_t> segment() const { return segment_; }
  int line() const { return line_; }
  int column() const { return column_; }

  void set_location(int line, int column) {
    line_ = line;
    column_ = column;
    located_ = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
               kind_ + ": " + message_;
  }

  const char* what() const noexcept override {
    return located_.empty() ? std::runtime_error::what() : located_.c_str();
  }

 private:
  std::string kind_;
  std::string message_;
  std::optional<size_t> segment_;
  int line_ = 0;
  int column_ = 0;
  std::string located_;
};

#define UMPF_FUNCTION_ERROR(Name)                                                     \
  class Name : public FunctionError {                                                  \
   public:                                                                             \
    explicit Name(std::string message, std::optional<size_t> segment = {})             \
        : FunctionError(#Name, std::move(message), segment) {}                         \
  };

UMPF_FUNCTION_ERROR(SyntaxError)
UMPF_FUNCTION_ERROR(DomainGapError)
UMPF_FUNCTION_ERROR(NegativeValueError)
UMPF_FUNCTION_ERROR(PoleError)
UMPF_FUNCTION_ERROR(DegreeError)

#undef UMPF_FUNCTION_ERROR

/// Left limit at 0, or a point outside [0, inf).
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Two irrational extremal values could not be ordered exactly, or the
/// extremum itself is irrational and has no rational representation.
class IrrationalExtremumUnresolved : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotRealizable : public Error {
 public:
  using Error::Error;
};

class NonAmenableDiagonal : public Error {
 public:
  using Error::Error;
};

/// Malformed or container-invalid distance matrix input.
class MatrixFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace umpf
