#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scratchpad {

// Unsigned decimal number as an explicit digit sequence, most-significant
// first. Non-empty; no leading zero unless the value is exactly 0.
struct DigitString {
    std::vector<std::uint8_t> digits;

    static DigitString from_decimal(std::string_view text);  // "29"; throws std::invalid_argument
    static DigitString from_spaced(std::string_view text);   // "2 9"; throws std::invalid_argument
    static DigitString from_digits(std::vector<std::uint8_t> digits);  // validates invariants

    std::string spaced() const;   // "2 9"
    std::string decimal() const;  // "29"
    std::size_t size() const { return digits.size(); }

    bool operator==(const DigitString&) const = default;
};

// Grade-school digit adder, kept separate from the scratchpad step builder so
// the two can check each other.
DigitString add_digits(const DigitString& a, const DigitString& b);

// Drops leading zeros, keeping a single "0" for zero.
std::vector<std::uint8_t> strip_leading_zeros(std::vector<std::uint8_t> digits);

std::string spaced_digits(const std::vector<std::uint8_t>& digits);

}  // namespace scratchpad
