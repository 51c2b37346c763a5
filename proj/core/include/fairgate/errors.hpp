#pragma once

#include <stdexcept>
#include <string>

namespace fairgate {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data: missing files, bad rows, unknown labels or levels.
class DataError : public Error {
public:
  explicit DataError(const std::string& what) : Error(what) {}
};

/// Caller misuse: bad arguments, violated preconditions.
class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

/// Numerical failure: rank deficiency in strict mode, non-convergence.
class NumericError : public Error {
public:
  explicit NumericError(const std::string& what) : Error(what) {}
};

/// FHE backend failure: level exhaustion, scale mismatch, bad parameters.
class FheError : public Error {
public:
  explicit FheError(const std::string& what) : Error(what) {}
};

/// Protocol failure: framing, ordering, transport, integrity.
class ProtocolError : public Error {
public:
  explicit ProtocolError(const std::string& what) : Error(what) {}
};

}  // namespace fairgate
