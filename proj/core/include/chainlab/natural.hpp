#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chainlab {

// Unbounded non-negative integer. GMP's canonical representation guarantees
// that equal values compare equal regardless of how they were produced.
using Natural = mpz_class;

inline std::string to_decimal(const Natural& n) { return n.get_str(10); }

inline Natural natural_from_decimal(const std::string& s) {
  return Natural(s, 10);
}

// Number of bits in the minimal binary representation; bit_length(0) == 1
// so that every value has a printable width.
inline uint64_t bit_length(const Natural& n) {
  if (n == 0) return 1;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool fits_u64(const Natural& n) {
  return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline uint64_t to_u64(const Natural& n) {
  uint64_t lo = mpz_get_ui(n.get_mpz_t());
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 32) {
    Natural hi = n >> 32;
    return (static_cast<uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
           (lo & 0xffffffffULL);
  }
  return lo;
}

}  // namespace chainlab
