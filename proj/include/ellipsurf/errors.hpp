#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ellipsurf {

/// Base for every error raised by the library. Carries the name of the
/// module that raised it and a stable error-kind name, so front ends can
/// report e.g. "DomainError (hyperfn): ...".
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string kind, const std::string& what)
      : std::runtime_error(what), module_(std::move(module)), kind_(std::move(kind)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string module_;
  std::string kind_;
};

/// Argument outside the region where the requested evaluation is defined.
class DomainError : public Error {
 public:
  DomainError(std::string module, const std::string& what)
      : Error(std::move(module), "DomainError", what) {}
};

/// Gamma function evaluated at a pole (non-positive integer).
class PoleError : public Error {
 public:
  PoleError(std::string module, const std::string& what)
      : Error(std::move(module), "PoleError", what) {}
};

/// The two-term 1/z continuation of 2F1 is singular because a - b is an integer.
class DegenerateContinuationError : public Error {
 public:
  DegenerateContinuationError(std::string module, const std::string& what)
      : Error(std::move(module), "DegenerateContinuationError", what) {}
};

/// Semi-axes that are non-positive, non-finite, or inconsistent with the
/// requested shape.
class InvalidAxesError : public Error {
 public:
  InvalidAxesError(std::string module, const std::string& what)
      : Error(std::move(module), "InvalidAxesError", what) {}
};

}  // namespace ellipsurf
