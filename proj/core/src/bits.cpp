#include "chainlab/bits.hpp"

#include <stdexcept>

namespace chainlab {

BitString to_bits(const Natural& n) {
  if (n < 0) throw std::invalid_argument("to_bits: negative value");
  return BitString(n.get_str(2));
}

Natural from_bits(const BitString& b) {
  if (b.bits.empty()) throw std::invalid_argument("from_bits: empty bit string");
  for (char c : b.bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("from_bits: non-binary character");
  }
  Natural n;
  mpz_set_str(n.get_mpz_t(), b.bits.c_str(), 2);
  return n;
}

DigitString digits_of(const Natural& n) {
  if (n < 0) throw std::invalid_argument("digits_of: negative value");
  std::string dec = n.get_str(10);
  DigitString out;
  out.reserve(dec.size());
  for (char c : dec) out.push_back(static_cast<uint8_t>(c - '0'));
  return out;
}

Natural natural_from_digits(const DigitString& digits) {
  if (digits.empty())
    throw std::invalid_argument("natural_from_digits: empty digit string");
  std::string dec;
  dec.reserve(digits.size());
  for (uint8_t d : digits) {
    if (d > 9) throw std::invalid_argument("natural_from_digits: digit > 9");
    dec.push_back(static_cast<char>('0' + d));
  }
  return Natural(dec, 10);
}

}  // namespace chainlab
