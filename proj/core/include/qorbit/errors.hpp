#pragma once

#include <stdexcept>
#include <string>

namespace qorbit {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A state vector whose squared norm does not equal 2^k.
struct NormalizationViolation : Error {
  using Error::Error;
};

// Malformed byte encoding or state-set file.
struct DecodeError : Error {
  using Error::Error;
};

// Closure grew past the configured bound; usually a wrong generator set.
struct CapacityExceeded : Error {
  using Error::Error;
};

struct NotInSet : Error {
  using Error::Error;
};

// A generator image fell outside a set that was assumed closed.
struct NotClosed : Error {
  using Error::Error;
};

// (MM^dag)^2 not proportional to MM^dag; impossible for Clifford states.
struct FlatSpectrumViolation : Error {
  using Error::Error;
};

struct AmbiguousLabel : Error {
  using Error::Error;
};

// Non-uniform population; impossible for Clifford states.
struct NonUniform : Error {
  using Error::Error;
};

struct NotEnumerated : Error {
  using Error::Error;
};

struct RealModeViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Broken internal invariant (amplitude bounds, etc).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace qorbit
