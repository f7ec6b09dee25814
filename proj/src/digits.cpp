#include "scratchpad/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace scratchpad {

namespace {

void check_invariants(const std::vector<std::uint8_t>& digits) {
    if (digits.empty()) throw std::invalid_argument("digit string must be non-empty");
    for (std::uint8_t d : digits) {
        if (d > 9) throw std::invalid_argument("digit out of range");
    }
    if (digits.size() > 1 && digits.front() == 0) {
        throw std::invalid_argument("leading zero in digit string");
    }
}

}  // namespace

DigitString DigitString::from_decimal(std::string_view text) {
    std::vector<std::uint8_t> digits;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("non-digit in decimal text");
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    check_invariants(digits);
    return DigitString{std::move(digits)};
}

DigitString DigitString::from_spaced(std::string_view text) {
    std::vector<std::uint8_t> digits;
    bool expect_digit = true;
    for (char c : text) {
        if (expect_digit) {
            if (c < '0' || c > '9') throw std::invalid_argument("expected digit in spaced text");
            digits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (c != ' ') {
            throw std::invalid_argument("expected single space between digits");
        }
        expect_digit = !expect_digit;
    }
    if (expect_digit) throw std::invalid_argument("trailing space in spaced text");
    check_invariants(digits);
    return DigitString{std::move(digits)};
}

DigitString DigitString::from_digits(std::vector<std::uint8_t> digits) {
    check_invariants(digits);
    return DigitString{std::move(digits)};
}

std::string spaced_digits(const std::vector<std::uint8_t>& digits) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0) out += ' ';
        out += static_cast<char>('0' + digits[i]);
    }
    return out;
}

std::string DigitString::spaced() const { return spaced_digits(digits); }

std::string DigitString::decimal() const {
    std::string out;
    for (std::uint8_t d : digits) out += static_cast<char>('0' + d);
    return out;
}

DigitString add_digits(const DigitString& a, const DigitString& b) {
    std::vector<std::uint8_t> out;
    int carry = 0;
    auto ia = a.digits.rbegin();
    auto ib = b.digits.rbegin();
    while (ia != a.digits.rend() || ib != b.digits.rend() || carry) {
        int s = carry;
        if (ia != a.digits.rend()) s += *ia++;
        if (ib != b.digits.rend()) s += *ib++;
        out.push_back(static_cast<std::uint8_t>(s % 10));
        carry = s / 10;
    }
    std::reverse(out.begin(), out.end());
    return DigitString::from_digits(strip_leading_zeros(std::move(out)));
}

std::vector<std::uint8_t> strip_leading_zeros(std::vector<std::uint8_t> digits) {
    std::size_t first = 0;
    while (first + 1 < digits.size() && digits[first] == 0) ++first;
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(first));
    return digits;
}

}  // namespace scratchpad
