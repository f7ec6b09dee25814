#include "scratchpad/budget.hpp"

#include <cctype>

namespace scratchpad {

long long count_units(std::string_view text, BudgetUnit unit) {
    if (unit == BudgetUnit::character) return static_cast<long long>(text.size());
    long long tokens = 0;
    bool in_token = false;
    for (char c : text) {
        const bool ws = std::isspace(static_cast<unsigned char>(c)) != 0;
        if (!ws && !in_token) ++tokens;
        in_token = !ws;
    }
    return tokens;
}

bool fits_budget(const ExampleRecord& record, const BudgetPolicy& policy) {
    return count_units(record.input_text, policy.unit) <= policy.max_context &&
           count_units(record.target_text, policy.unit) <= policy.max_target;
}

}  // namespace scratchpad
