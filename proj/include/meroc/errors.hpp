#pragma once

#include <stdexcept>
#include <string>

namespace meroc {

// Errors carry a short machine-readable code so the CLI can map them to
// structured JSON error objects without string matching.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Input outside the mathematical domain of an operation (k < 2, lambda = 0,
// Im(tau) <= 0, pole at an evaluation point, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("domain", message) {}
};

// A computation that would require coefficients beyond a truncation order
// or degree bound.
class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& message)
      : Error("truncation", message) {}
};

// Structural validation failure of an input object (Jacobi identity,
// functoriality, malformed JSON, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("validation", message) {}
};

// Two redundant computation paths disagreed where exact equality is
// guaranteed.  Always a bug or truncation misuse, never user error.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& message)
      : Error("consistency", message) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& message)
      : Error("unsupported", message) {}
};

}  // namespace meroc
