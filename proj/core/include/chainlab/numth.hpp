#pragma once

#include <cstdint>

#include "chainlab/errors.hpp"
#include "chainlab/natural.hpp"

namespace chainlab {

// gcd(a, 0) == a. Throws std::invalid_argument when both arguments are zero.
Natural gcd(const Natural& a, const Natural& b);

// Unique u in [1, n-1] with a*u == 1 (mod n); n >= 2. Throws
// NotInvertibleError carrying gcd(a, n) when a is not invertible.
Natural mod_inverse(const Natural& a, const Natural& n);

// base^exp mod n by square-and-multiply; n >= 1 (n == 1 yields 0).
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& n);

// Smallest t >= 1 with a^t == 1 (mod n). Requires gcd(a, n) == 1 and n >= 2.
// Prime moduli go through the factored group order; composite moduli are
// iterated, which is fine at desk scale only.
Natural multiplicative_order(const Natural& a, const Natural& n);

struct PrimalityResult {
  bool probably_prime = false;
  // True when the verdict is exact (deterministic witness set below 2^64,
  // or GMP proved it outright). False means strong-probable-prime only.
  bool proven = false;
};

PrimalityResult primality(const Natural& n);
bool is_prime(const Natural& n);

// Smallest prime dividing n (n >= 2), by trial division. Desk-scale oracle:
// refuses composites whose least factor exceeds the trial bound.
Natural least_prime_factor(const Natural& n);

inline constexpr uint64_t kLucasLehmerMaxExponent = 20000;

// True iff 2^p - 1 is prime. p must be 2 or an odd prime; composite p throws
// std::invalid_argument, p beyond the desk-scale ceiling throws
// ResourceLimitError.
bool lucas_lehmer(const Natural& p);

}  // namespace chainlab
