#pragma once

#include <stdexcept>
#include <string>

#include "chainlab/natural.hpp"

namespace chainlab {

// Thrown by mod_inverse when gcd(a, n) != 1. The blocking gcd is itself a
// divisor hint, so callers get it in the payload.
class NotInvertibleError : public std::domain_error {
 public:
  NotInvertibleError(Natural gcd, const std::string& what)
      : std::domain_error(what), gcd_(std::move(gcd)) {}
  const Natural& blocking_gcd() const { return gcd_; }

 private:
  Natural gcd_;
};

// Refusal to start a computation that exceeds the configured desk-scale
// budget (Lucas-Lehmer exponent ceiling, adjacency matrix size, ...).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// A graph-pair generation method was asked for inputs outside its
// precondition (e.g. ResidueComplement when 2^j does not divide n-1).
class MethodInapplicableError : public std::invalid_argument {
 public:
  explicit MethodInapplicableError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace chainlab
