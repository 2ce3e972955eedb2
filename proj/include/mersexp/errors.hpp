#pragma once

#include <stdexcept>
#include <string>

namespace mersexp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-range or structurally invalid arguments.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two residues from different rings were combined.
class ModulusMismatchError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// The requested exponent has no inverse modulo 2^n - 1.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// A self-check on a constructed value failed. Indicates a bug, never bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mersexp
