#pragma once

#include <stdexcept>
#include <string>

namespace cfa {

// Base for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data or arguments violate a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Supervised weighting requested without labels (and pseudo-labels disabled).
class MissingLabels : public Error {
 public:
  using Error::Error;
};

// A numeric cell or line could not be parsed; message carries (line, column).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Class columns disagree between input files.
class HeaderMismatch : public Error {
 public:
  using Error::Error;
};

// A label references a class that does not exist.
class UnknownClass : public Error {
 public:
  using Error::Error;
};

// Violated internal invariant (batch gap/overlap and the like).
class InternalError : public Error {
 public:
  using Error::Error;
};

// Output-side filesystem failure. The CLI maps this to exit code 2,
// everything else above to exit code 1.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfa
