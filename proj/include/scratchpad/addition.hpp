#pragma once

#include "scratchpad/digits.hpp"
#include "scratchpad/record.hpp"

#include <string>
#include <vector>

namespace scratchpad {

// One long-addition scratch line. Operand remainders are zero-padded to equal
// length; partial holds the low digits of the sum produced so far.
struct AdditionStep {
    std::vector<std::uint8_t> remaining_a;
    std::vector<std::uint8_t> remaining_b;
    std::vector<std::uint8_t> partial;
    int carry = 0;

    bool operator==(const AdditionStep&) const = default;
};

struct AdditionScratchpad {
    std::vector<AdditionStep> steps;          // padded length + 1 entries
    std::vector<std::uint8_t> final_line;     // leading carry digit + last partial
    DigitString answer;

    bool operator==(const AdditionScratchpad&) const = default;
};

// Runs grade-school long addition, recording one step per digit pair. Step 0
// holds the full padded operands with empty partial and carry 0.
AdditionScratchpad addition_steps(const DigitString& a, const DigitString& b);

// Target block:
//   <scratch>
//   {remside}, {partial} C: {carry}     one line per step
//   {final_line}
//   </scratch>
//   {answer}
// remside is "{remaining_a} + {remaining_b} " while digits remain, else empty,
// which yields the double space of the first line and the leading comma of the
// last step line. No trailing newline.
std::string render_addition_target(const AdditionScratchpad& sp);

// "{a} + {b}" with space-separated digits, operands unpadded.
std::string render_addition_input(const DigitString& a, const DigitString& b);

// Baseline record: same input, target is the answer digits only.
ExampleRecord render_addition_direct(const DigitString& a, const DigitString& b);

// Scratchpad-mode record for the same pair.
ExampleRecord render_addition_scratchpad(const DigitString& a, const DigitString& b);

// Inverse of render_addition_target. Throws MalformedScratchpad with the
// 1-based line number of the first deviation from the grammar.
AdditionScratchpad parse_addition_target(std::string_view text);

// True iff every step's digit arithmetic is consistent and the answer equals
// the independent digit-adder's sum of the step-0 operands.
bool verify_addition(const AdditionScratchpad& sp);

}  // namespace scratchpad
