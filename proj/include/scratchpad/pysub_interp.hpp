#pragma once

#include "scratchpad/pysub_ast.hpp"
#include "scratchpad/pysub_ops.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scratchpad::pysub {

struct RunResult {
    std::optional<Value> value;
    std::optional<Fault> fault;

    bool ok() const { return value.has_value(); }
};

// Direct evaluator: computes fn_name(inputs) with no trace bookkeeping. Kept
// as a second, independently written engine so it can serve as the oracle for
// trace(); the two agree on results, fault classification and step counting.
// Throws UnknownFunction if prog does not define fn_name.
RunResult run_direct(const Program& prog, const std::string& fn_name,
                     const std::vector<Value>& inputs, const Limits& limits = {});

struct StepOutcome {
    std::optional<Frame> frame;
    std::optional<Fault> fault;

    bool ok() const { return frame.has_value(); }
};

// Executes one statement against the given bindings and returns the resulting
// frame (single-line transformation semantics). Throws LexError/ParseError if
// stmt_src is not exactly one statement.
StepOutcome single_line_step(const Frame& init, std::string_view stmt_src,
                             const Limits& limits = {});

}  // namespace scratchpad::pysub
