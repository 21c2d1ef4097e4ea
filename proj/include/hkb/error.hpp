#pragma once

#include <stdexcept>
#include <string>

namespace hkb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Atom or predicate outside the signature, or values built over different signatures.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused: the instance is above the configured atom cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Precondition violation (non-definite program, empty model set, non-first-order
// theory passed to model enumeration, unknown property name, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hkb
