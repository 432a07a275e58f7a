#ifndef GMPI_ERROR_HPP
#define GMPI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gmpi {

// Base of every exception thrown by the library. The C API maps each
// subclass onto one gmpi_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live over different variable contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// A documented desk-scale limit (Taylor generator cap, lattice cap) was hit.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed or out-of-range input (bad JSON, unknown family tag, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; indicates a bug or a corrupted object.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A substitution family or inducing ideal fails validation. `witness`
// names the offending data in human-readable form.
class ValidationError : public Error {
 public:
  enum class Kind { kMissingDegree, kWrongDegree, kNestingViolation, kImproperIdeal, kShape };

  ValidationError(Kind kind, const std::string& message, std::string witness)
      : Error(message), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::string witness_;
};

}  // namespace gmpi

#endif  // GMPI_ERROR_HPP
