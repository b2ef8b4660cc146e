#pragma once

#include <stdexcept>
#include <string>

namespace qb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A presentation whose ideal could not be shown to contain all long paths.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

class InvalidRepresentation : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  AlgebraMismatch() : Error("modules live over different algebras") {}
  using Error::Error;
};

/// A certified computation needs a larger (or characteristic zero) field.
class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

/// Krull-Schmidt splitting could neither certify nor split a summand.
class UndeterminedSummand : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. the ten self-injectivity
/// conditions disagree).
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qb
