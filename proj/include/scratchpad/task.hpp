#pragma once

#include "scratchpad/pysub_ops.hpp"
#include "scratchpad/value.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scratchpad {

// One gold input/output/trace triple for a program task.
struct TaskExample {
    std::vector<Value> inputs;
    std::optional<Value> output;         // absent when the gold run faulted
    std::optional<pysub::Fault> fault;
    std::string trace_text;              // rendered gold trace

    bool operator==(const TaskExample&) const = default;
};

enum class Provenance { original, augmented };

std::string to_string(Provenance p);
Provenance provenance_from_string(std::string_view text);

struct TaskBundle {
    std::string task_id;
    std::string source;                  // program text
    Provenance provenance = Provenance::original;
    std::vector<TaskExample> examples;

    bool operator==(const TaskBundle&) const = default;
};

}  // namespace scratchpad
