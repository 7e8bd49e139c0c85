#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cotwist {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};
struct SpaceMismatch : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t at)
      : Error(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};
struct UnknownGenerator : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};
struct SNotBijective : Error {
  using Error::Error;
};
struct NotATwisting : Error {
  using Error::Error;
};
struct NotACocycle : Error {
  using Error::Error;
};
struct WitnessInvalid : Error {
  using Error::Error;
};
struct InverseMissing : Error {
  using Error::Error;
};
struct CoidealFailure : Error {
  using Error::Error;
};
struct NotGaloisError : Error {
  using Error::Error;
};
struct PsiNotColinear : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};
struct MalformedDoc : Error {
  using Error::Error;
};

// Internal consistency failure: a mathematically guaranteed assertion did not
// hold, which signals a bug rather than bad input.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace cotwist
