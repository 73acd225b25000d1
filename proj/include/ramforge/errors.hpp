#pragma once

#include <stdexcept>
#include <string>

namespace rf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's stated domain (s < 2, a outside (0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested digits exceed what a value carries, or a precision request is invalid.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Text that does not conform to the expected syntax. Carries the offset of the
// first offending character when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// rationalize(): no continued-fraction convergent meets both bounds.
class NoRationalFound : public Error {
 public:
  using Error::Error;
};

// Relation engine: working precision below the floor for the input dimension,
// or a detected relation failed its residual re-check.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

// Relation engine: zero entry or fewer than two values.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Inverse-symbolic lookup: query carries fewer than 13 significant digits.
class TooFewDigits : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rf
