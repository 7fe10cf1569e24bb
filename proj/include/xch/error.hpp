#pragma once

#include <stdexcept>
#include <string>

namespace xch {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown names, inconsistent shapes.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A mathematical precondition does not hold (not an ideal, invalid action, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

// Requested degree is outside the computed window.
class WindowError : public Error {
 public:
  using Error::Error;
};

// Operation needs characteristic zero but a prime field was selected.
class FieldError : public Error {
 public:
  using Error::Error;
};

// Estimated chain dimension is above the configured cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t estimate, std::size_t budget)
      : Error(what), estimate_(estimate), budget_(budget) {}
  std::size_t estimate() const { return estimate_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t estimate_;
  std::size_t budget_;
};

// Something that cannot happen over a field happened anyway.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace xch
