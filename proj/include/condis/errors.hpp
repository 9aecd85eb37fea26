#pragma once

#include <stdexcept>
#include <string>

namespace condis {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Composition or comparison of values whose endpoints do not line up.
struct TypeMismatch : Error {
  using Error::Error;
};

// An index, code or table entry outside its declared range.
struct OutOfRange : Error {
  using Error::Error;
};

// Radix or object sequences of the wrong length.
struct LengthMismatch : Error {
  using Error::Error;
};

// A represented relation that is not total and single-valued on its source.
// Carries the first offending source element and how many images it has.
struct NotAFunction : Error {
  NotAFunction(int source, int images, const std::string& what)
      : Error(what), source(source), images(images) {}
  int source;
  int images;
};

struct SyntaxError : Error {
  SyntaxError(std::size_t position, const std::string& what)
      : Error(what), position(position) {}
  std::size_t position;  // 1-based character offset into the input
};

// An ill-typed term; the message names the offending subterm.
struct TypeError : Error {
  using Error::Error;
};

struct InternalInvariantViolation : Error {
  using Error::Error;
};

}  // namespace condis
