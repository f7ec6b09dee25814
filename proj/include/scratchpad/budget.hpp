#pragma once

#include "scratchpad/record.hpp"

#include <string_view>

namespace scratchpad {

enum class BudgetUnit { whitespace_token, character };

// Generation-window analog: tokenizer-free limits on prompt and target size.
struct BudgetPolicy {
    BudgetUnit unit = BudgetUnit::whitespace_token;
    long long max_context = 1024;
    long long max_target = 512;
};

long long count_units(std::string_view text, BudgetUnit unit);

// True iff input_text fits max_context and target_text fits max_target.
bool fits_budget(const ExampleRecord& record, const BudgetPolicy& policy);

}  // namespace scratchpad
