#include "scratchpad/addition.hpp"

#include "scratchpad/errors.hpp"

#include <algorithm>

namespace scratchpad {

AdditionScratchpad addition_steps(const DigitString& a, const DigitString& b) {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<std::uint8_t> pa(n - a.size(), 0);
    pa.insert(pa.end(), a.digits.begin(), a.digits.end());
    std::vector<std::uint8_t> pb(n - b.size(), 0);
    pb.insert(pb.end(), b.digits.begin(), b.digits.end());

    AdditionScratchpad sp;
    AdditionStep step{pa, pb, {}, 0};
    sp.steps.push_back(step);
    for (std::size_t i = 0; i < n; ++i) {
        const int s = step.remaining_a.back() + step.remaining_b.back() + step.carry;
        step.remaining_a.pop_back();
        step.remaining_b.pop_back();
        step.partial.insert(step.partial.begin(), static_cast<std::uint8_t>(s % 10));
        step.carry = s / 10;
        sp.steps.push_back(step);
    }
    sp.final_line.push_back(static_cast<std::uint8_t>(step.carry));
    sp.final_line.insert(sp.final_line.end(), step.partial.begin(), step.partial.end());
    sp.answer = DigitString::from_digits(strip_leading_zeros(sp.final_line));
    return sp;
}

namespace {

std::string render_step_line(const AdditionStep& step) {
    std::string remside;
    if (!step.remaining_a.empty()) {
        remside = spaced_digits(step.remaining_a) + " + " + spaced_digits(step.remaining_b) + " ";
    }
    return remside + ", " + spaced_digits(step.partial) + " C: " + std::to_string(step.carry);
}

}  // namespace

std::string render_addition_target(const AdditionScratchpad& sp) {
    std::string out = "<scratch>\n";
    for (const AdditionStep& step : sp.steps) {
        out += render_step_line(step);
        out += '\n';
    }
    out += spaced_digits(sp.final_line);
    out += "\n</scratch>\n";
    out += sp.answer.spaced();
    return out;
}

std::string render_addition_input(const DigitString& a, const DigitString& b) {
    return a.spaced() + " + " + b.spaced();
}

ExampleRecord render_addition_direct(const DigitString& a, const DigitString& b) {
    ExampleRecord rec;
    rec.mode = RecordMode::direct;
    rec.input_text = render_addition_input(a, b);
    rec.target_text = add_digits(a, b).spaced();
    return rec;
}

ExampleRecord render_addition_scratchpad(const DigitString& a, const DigitString& b) {
    ExampleRecord rec;
    rec.mode = RecordMode::scratchpad;
    rec.input_text = render_addition_input(a, b);
    rec.target_text = render_addition_target(addition_steps(a, b));
    return rec;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::vector<std::uint8_t> parse_spaced_digits(std::string_view text, int line_no) {
    if (text.empty()) return {};
    std::vector<std::uint8_t> digits;
    bool expect_digit = true;
    for (char c : text) {
        if (expect_digit) {
            if (c < '0' || c > '9') throw MalformedScratchpad(line_no, "expected digit");
            digits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (c != ' ') {
            throw MalformedScratchpad(line_no, "expected single space between digits");
        }
        expect_digit = !expect_digit;
    }
    if (expect_digit) throw MalformedScratchpad(line_no, "dangling space in digit run");
    return digits;
}

AdditionStep parse_step_line(std::string_view line, int line_no) {
    const std::size_t carry_pos = line.rfind(" C: ");
    if (carry_pos == std::string_view::npos) {
        throw MalformedScratchpad(line_no, "step line missing ' C: '");
    }
    std::string_view carry_text = line.substr(carry_pos + 4);
    if (carry_text != "0" && carry_text != "1") {
        throw MalformedScratchpad(line_no, "carry digit must be 0 or 1");
    }

    std::string_view head = line.substr(0, carry_pos);
    const std::size_t comma = head.find(',');
    if (comma == std::string_view::npos) {
        throw MalformedScratchpad(line_no, "step line missing ','");
    }
    std::string_view remside = head.substr(0, comma);
    std::string_view after = head.substr(comma + 1);
    if (after.empty() || after.front() != ' ') {
        throw MalformedScratchpad(line_no, "expected space after ','");
    }
    after.remove_prefix(1);

    AdditionStep step;
    step.carry = carry_text == "1" ? 1 : 0;
    step.partial = parse_spaced_digits(after, line_no);
    if (!remside.empty()) {
        if (remside.back() != ' ') {
            throw MalformedScratchpad(line_no, "operand side must end with a space");
        }
        remside.remove_suffix(1);
        const std::size_t plus = remside.find(" + ");
        if (plus == std::string_view::npos) {
            throw MalformedScratchpad(line_no, "operand side missing ' + '");
        }
        step.remaining_a = parse_spaced_digits(remside.substr(0, plus), line_no);
        step.remaining_b = parse_spaced_digits(remside.substr(plus + 3), line_no);
        if (step.remaining_a.empty() || step.remaining_b.empty()) {
            throw MalformedScratchpad(line_no, "empty operand in non-empty operand side");
        }
        if (step.remaining_a.size() != step.remaining_b.size()) {
            throw MalformedScratchpad(line_no, "operand remainders differ in length");
        }
    }
    return step;
}

}  // namespace

AdditionScratchpad parse_addition_target(std::string_view text) {
    std::vector<std::string> lines = split_lines(text);
    // Tolerate a single trailing newline after the answer.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.size() < 6) throw MalformedScratchpad(static_cast<int>(lines.size()) + 1, "truncated scratchpad");
    if (lines[0] != "<scratch>") throw MalformedScratchpad(1, "expected '<scratch>'");

    const std::size_t close = lines.size() - 2;
    if (lines[close] != "</scratch>") {
        throw MalformedScratchpad(static_cast<int>(close) + 1, "expected '</scratch>'");
    }

    AdditionScratchpad sp;
    // Lines 1 .. close-2 are step lines; close-1 holds the final digit run.
    for (std::size_t i = 1; i + 1 < close; ++i) {
        sp.steps.push_back(parse_step_line(lines[i], static_cast<int>(i) + 1));
    }
    if (sp.steps.size() < 2) {
        throw MalformedScratchpad(2, "scratchpad needs at least two step lines");
    }
    const int final_no = static_cast<int>(close);
    sp.final_line = parse_spaced_digits(lines[close - 1], final_no);
    if (sp.final_line.empty()) throw MalformedScratchpad(final_no, "empty final line");

    const int answer_no = static_cast<int>(lines.size());
    std::vector<std::uint8_t> answer = parse_spaced_digits(lines.back(), answer_no);
    if (answer.empty()) throw MalformedScratchpad(answer_no, "empty answer line");
    if (answer.size() > 1 && answer.front() == 0) {
        throw MalformedScratchpad(answer_no, "answer has a leading zero");
    }
    sp.answer = DigitString::from_digits(std::move(answer));
    return sp;
}

bool verify_addition(const AdditionScratchpad& sp) {
    if (sp.steps.size() < 2) return false;
    const AdditionStep& first = sp.steps.front();
    const std::size_t n = first.remaining_a.size();
    if (first.remaining_b.size() != n || !first.partial.empty() || first.carry != 0) return false;
    if (sp.steps.size() != n + 1) return false;

    for (std::size_t i = 1; i < sp.steps.size(); ++i) {
        const AdditionStep& prev = sp.steps[i - 1];
        const AdditionStep& cur = sp.steps[i];
        if (prev.remaining_a.empty()) return false;
        const int s = prev.remaining_a.back() + prev.remaining_b.back() + prev.carry;
        AdditionStep expected;
        expected.remaining_a.assign(prev.remaining_a.begin(), prev.remaining_a.end() - 1);
        expected.remaining_b.assign(prev.remaining_b.begin(), prev.remaining_b.end() - 1);
        expected.partial = prev.partial;
        expected.partial.insert(expected.partial.begin(), static_cast<std::uint8_t>(s % 10));
        expected.carry = s / 10;
        if (cur != expected) return false;
    }

    const AdditionStep& last = sp.steps.back();
    std::vector<std::uint8_t> expected_final;
    expected_final.push_back(static_cast<std::uint8_t>(last.carry));
    expected_final.insert(expected_final.end(), last.partial.begin(), last.partial.end());
    if (sp.final_line != expected_final) return false;
    if (sp.answer.digits != strip_leading_zeros(expected_final)) return false;

    // Independent check of the sum itself.
    const DigitString a = DigitString::from_digits(strip_leading_zeros(first.remaining_a));
    const DigitString b = DigitString::from_digits(strip_leading_zeros(first.remaining_b));
    return sp.answer == add_digits(a, b);
}

}  // namespace scratchpad
