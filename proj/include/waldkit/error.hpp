#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace waldkit {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ZeroIdealError : public Error {
public:
  ZeroIdealError() : Error("the zero ideal (no generators) is not supported") {}
};

class UnitIdealError : public Error {
public:
  UnitIdealError() : Error("the unit ideal (generator 1) is not supported") {}
};

class ContextMismatchError : public Error {
public:
  using Error::Error;
};

class NotSquarefreeError : public Error {
public:
  using Error::Error;
};

class MalformedProgramError : public Error {
public:
  using Error::Error;
};

class NotApplicableError : public Error {
public:
  using Error::Error;
};

class NotAGraphError : public Error {
public:
  using Error::Error;
};

class DisjointnessError : public Error {
public:
  using Error::Error;
};

/// A resource cap (prime count, generator count) was hit.
class CapExceededError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace waldkit
