#include "chainlab/numth.hpp"

#include <array>
#include <stdexcept>

namespace chainlab {
namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = m == 1 ? 0 : 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for n < 2^64: this witness set is exact for
// every 64-bit integer.
constexpr std::array<uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kWitnesses) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Natural factor_out(Natural n, const Natural& p) {
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
  return n;
}

// Distinct prime factors by trial division; caller guarantees desk scale.
std::vector<Natural> distinct_prime_factors(Natural n) {
  std::vector<Natural> out;
  for (Natural p : {Natural(2), Natural(3)}) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      n = factor_out(n, p);
    }
  }
  Natural d = 5;
  while (d * d <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      n = factor_out(n, d);
    }
    d += (d % 6 == 5) ? 2 : 4;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Natural gcd(const Natural& a, const Natural& b) {
  if (a == 0 && b == 0)
    throw std::invalid_argument("gcd: both arguments are zero");
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Natural mod_inverse(const Natural& a, const Natural& n) {
  if (n < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  Natural u;
  if (mpz_invert(u.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
    Natural g = (a % n == 0) ? n : gcd(a, n);
    throw NotInvertibleError(g, "mod_inverse: gcd(" + to_decimal(a) + ", " +
                                    to_decimal(n) + ") = " + to_decimal(g));
  }
  return u;
}

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& n) {
  if (n == 0) throw std::invalid_argument("mod_pow: modulus must be >= 1");
  Natural r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), n.get_mpz_t());
  return r;
}

Natural multiplicative_order(const Natural& a, const Natural& n) {
  if (n < 2)
    throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  Natural x = a % n;
  if (x == 0 || gcd(x, n) != 1)
    throw std::invalid_argument("multiplicative_order: arguments not coprime");
  if (x == 1) return 1;
  if (is_prime(n)) {
    // Start from the group order and strip unnecessary prime powers.
    Natural t = n - 1;
    for (const Natural& p : distinct_prime_factors(n - 1)) {
      while (t % p == 0 && mod_pow(a, t / p, n) == 1) t /= p;
    }
    return t;
  }
  Natural pow = x;
  Natural t = 1;
  while (pow != 1) {
    pow = pow * x % n;
    ++t;
    if (t > n)
      throw std::logic_error("multiplicative_order: exceeded group size");
  }
  return t;
}

PrimalityResult primality(const Natural& n) {
  if (n < 2) return {false, true};
  if (fits_u64(n)) return {is_prime_u64(to_u64(n)), true};
  int v = mpz_probab_prime_p(n.get_mpz_t(), 40);
  return {v > 0, v == 2};
}

bool is_prime(const Natural& n) { return primality(n).probably_prime; }

Natural least_prime_factor(const Natural& n) {
  if (n < 2)
    throw std::invalid_argument("least_prime_factor: argument must be >= 2");
  for (unsigned long small : {2ul, 3ul, 5ul}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), small)) return Natural(small);
  }
  if (is_prime(n)) return n;
  constexpr unsigned long kTrialCeiling = 1ul << 26;
  Natural d = 7;
  static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  int w = 0;
  while (d * d <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return d;
    if (d > kTrialCeiling)
      throw ResourceLimitError(
          "least_prime_factor: trial division past desk-scale bound");
    d += wheel[w];
    w = (w + 1) & 7;
  }
  return n;
}

bool lucas_lehmer(const Natural& p) {
  if (p == 2) return true;
  if (!is_prime(p) || p % 2 == 0)
    throw std::invalid_argument("lucas_lehmer: exponent must be prime");
  if (p > kLucasLehmerMaxExponent)
    throw ResourceLimitError("lucas_lehmer: exponent " + to_decimal(p) +
                             " beyond desk-scale ceiling " +
                             std::to_string(kLucasLehmerMaxExponent));
  uint64_t pe = to_u64(p);
  Natural m = (Natural(1) << pe) - 1;
  Natural s = 4;
  for (uint64_t i = 0; i + 2 < pe; ++i) {
    s = s * s - 2;
    // Reduction mod 2^p - 1 via shift-add keeps this quadratic step cheap.
    while (bit_length(s) > pe) {
      Natural low = s & m;
      s = low + (s >> pe);
    }
    if (s == m) s = 0;
  }
  return s == 0;
}

}  // namespace chainlab
