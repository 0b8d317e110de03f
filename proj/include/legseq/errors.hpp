#pragma once

#include <stdexcept>

namespace legseq {

/// Invalid caller-supplied value: bad prime, out-of-range shift, mismatched
/// periods, malformed coefficient string.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A supplied modulus is reducible or a supplied generator is not primitive.
class FieldConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Always an implementation bug or
/// injected fault, never a valid state.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace legseq
