#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chainlab/bits.hpp"
#include "chainlab/natural.hpp"

namespace chainlab {

// Zero-insertion plan for one digital-binary encoding. pads[i] is the count
// of zeros prepended to the code of digit i+2 (1-indexed digits); the first
// digit's code is never padded because leading zeros do not change the
// decimal readback. Length is always digit-count minus one.
using PadPlan = std::vector<uint32_t>;

inline PadPlan zero_plan(size_t digit_count) {
  return PadPlan(digit_count == 0 ? 0 : digit_count - 1, 0);
}

// Concatenation of the minimal binary code of each digit (digit 0 -> "0"),
// with plan-specified zeros inserted between codes.
BitString encode_digital(const DigitString& digits, const PadPlan& plan);

// One dig-bin-then-decimal step with the all-zero plan.
Natural chain_step(const Natural& value);

// Pads every digit's code to the maximum minimal-code width among the
// digits ("add zeros to make digits same").
PadPlan equal_expand_plan(const DigitString& digits);

// Deterministic plan order: all-zero plan, then equal-expand when distinct,
// then the remaining plans with entries in [0, max_pad] by ascending total
// pad count, ties lexicographic.
std::vector<PadPlan> enumerate_pad_plans(const DigitString& digits,
                                         uint32_t max_pad);

enum class ChainEnd { DivisorFound, SingleDigit, Repeat, BudgetExhausted };

struct ChainStep {
  uint64_t index = 0;        // 1-based position in the overall search log
  Natural input_value;       // D_{j-1}, or the chain origin
  BitString code;            // B_j
  Natural output_value;      // D_j
  Natural gcd_with_n;
  PadPlan plan;
};

struct Chain {
  Natural origin;
  std::vector<ChainStep> steps;
  ChainEnd terminal_reason = ChainEnd::SingleDigit;
};

// Iterates chain_step with all-zero plans, probing gcd(D_j, against) at every
// step. Terminates with DivisorFound when 1 < gcd < against, Repeat when an
// output value recurs (the origin counts as seen), SingleDigit when the
// output has one digit. Passing against == 1 disables probing, since
// gcd(x, 1) == 1 can never signal a divisor.
Chain run_first_chain(const Natural& n, const Natural& against);

enum class DcStrategy { EqualExpandFirst, BoundedEnumeration };
enum class DcVerdict { CompositeWithDivisor, Inconclusive };

struct FactorOutcome {
  DcVerdict verdict = DcVerdict::Inconclusive;
  std::optional<Natural> divisor;
  uint64_t chains_explored = 0;
  uint64_t iterations = 0;  // total encode steps, first chain included
  uint64_t gcd_calls = 0;
  uint64_t budget_used = 0;
  bool budget_exhausted = false;
  std::vector<ChainStep> log;
};

// Algorithm-1-style search: the first chain runs with all-zero plans; if no
// divisor surfaces, backtracking re-encodes chain positions (last value
// toward the origin) with alternative pad plans, depth-first into each
// re-encoded sub-chain. The all-zero plan at a position is explored last,
// since it is the default continuation. (value, plan) pairs are tried at
// most once globally. Every encode step costs one budget unit.
FactorOutcome jrlp_factor(const Natural& n, DcStrategy strategy,
                          uint64_t budget, uint32_t max_pad);

// ceil(c * (log2 n)^4): the default sweep budget. c must be positive.
uint64_t budget_for(const Natural& n, double c);

}  // namespace chainlab
