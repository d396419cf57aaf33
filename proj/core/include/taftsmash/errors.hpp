#pragma once

#include <stdexcept>
#include <string>

namespace taftsmash {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroError : Error {
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Exact division was requested but the remainder is nonzero.
struct NotDivisibleError : Error {
  explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

// A specialized bracket landed outside the central subalgebra.
struct NotCentralImageError : Error {
  explicit NotCentralImageError(const std::string& what) : Error(what) {}
};

struct NotCentralError : Error {
  explicit NotCentralError(const std::string& what) : Error(what) {}
};

struct SingularTraceFormError : Error {
  explicit SingularTraceFormError(const std::string& what) : Error(what) {}
};

struct PresentationMismatchError : Error {
  explicit PresentationMismatchError(const std::string& what) : Error(what) {}
};

struct InvalidActionError : Error {
  explicit InvalidActionError(const std::string& what) : Error(what) {}
};

}  // namespace taftsmash
