#pragma once

#include <stdexcept>
#include <string>

namespace ngdvqe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ParseError"; }
};

/// Sizes that do not line up: state vs. Hamiltonian, theta vs. circuit, etc.
class DimensionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DimensionError"; }
};

/// A value outside the range an operation accepts.
class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidArgument"; }
};

/// Raised when a gradient is too small to define a direction.
class VanishingGradient : public Error {
 public:
  VanishingGradient(const std::string& what, double norm) : Error(what), norm_(norm) {}
  const char* kind() const noexcept override { return "VanishingGradient"; }
  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "IoError"; }
};

/// A module error with run context prepended; keeps the original kind.
class RunError : public Error {
 public:
  RunError(const std::string& context, const Error& cause)
      : Error(context + ": " + cause.what()), kind_(cause.kind()) {}
  const char* kind() const noexcept override { return kind_.c_str(); }

 private:
  std::string kind_;
};

}  // namespace ngdvqe
