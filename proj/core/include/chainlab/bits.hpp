#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainlab/natural.hpp"

namespace chainlab {

// Binary numeral, most significant bit first. May carry leading zeros;
// the value is invariant under prepending zeros. Never empty once built
// through from_bits/encode paths.
struct BitString {
  std::string bits;

  BitString() = default;
  explicit BitString(std::string b) : bits(std::move(b)) {}

  size_t size() const { return bits.size(); }
  bool operator==(const BitString& o) const { return bits == o.bits; }
  auto operator<=>(const BitString& o) const { return bits <=> o.bits; }
};

// Base-10 digits, most significant first.
using DigitString = std::vector<uint8_t>;

// Minimal-length binary form (value 0 renders as "0").
BitString to_bits(const Natural& n);

// Parses a binary numeral; leading zeros are ignored. Throws
// std::invalid_argument on an empty string or non-binary characters.
Natural from_bits(const BitString& b);

DigitString digits_of(const Natural& n);

Natural natural_from_digits(const DigitString& digits);

}  // namespace chainlab
