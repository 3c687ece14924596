#pragma once

#include <stdexcept>
#include <string>

namespace shuffleworks {

/// Process exit codes used by the command-line tool. Stable API.
enum class ExitCode : int {
  kOk = 0,
  kTestFailure = 1,
  kParse = 2,
  kArity = 3,
  kOverflow = 4,
};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Malformed input: bad tokens, truncated files, non-bijective maps.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ExitCode::kParse, what) {}
};

/// A map that is not a bijection (or not self-inverse, for involutions).
class InvalidPermutation : public Error {
 public:
  explicit InvalidPermutation(const std::string& what) : Error(ExitCode::kParse, what) {}
};

/// Two operands that must have the same length do not.
class SizeMismatch : public Error {
 public:
  explicit SizeMismatch(const std::string& what) : Error(ExitCode::kParse, what) {}
};

/// An argument outside its documented domain (digit counts, k parameters, ...).
class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what) : Error(ExitCode::kParse, what) {}
};

/// N is not a multiple of k, or not a power of k where one is required.
class ArityError : public Error {
 public:
  explicit ArityError(const std::string& what) : Error(ExitCode::kArity, what) {}
};

/// Index arithmetic would not fit in a machine word.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(ExitCode::kOverflow, what) {}
};

/// Arguments to a modular operation that are not coprime.
class NotCoprime : public Error {
 public:
  explicit NotCoprime(const std::string& what) : Error(ExitCode::kParse, what) {}
};

}  // namespace shuffleworks
