#pragma once

#include "json.hpp"

#include <string>

namespace scratchpad {

enum class RecordMode { direct, scratchpad, trace, single_line };

std::string to_string(RecordMode mode);
RecordMode record_mode_from_string(std::string_view text);  // throws std::invalid_argument

// One training/eval item: what the model sees and what it must emit.
struct ExampleRecord {
    std::string id;
    std::string task_id;
    RecordMode mode = RecordMode::direct;
    std::string input_text;
    std::string target_text;
    nlohmann::json metadata = nlohmann::json::object();

    bool operator==(const ExampleRecord&) const = default;
};

}  // namespace scratchpad
