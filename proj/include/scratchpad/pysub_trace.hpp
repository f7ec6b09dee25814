#pragma once

#include "scratchpad/value.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scratchpad::pysub {

// Execution trace: strictly alternating state snapshots and executed source
// lines, starting with a state. A successful run ends on a state binding
// `output`; a faulting run ends on the failing line followed by error_text.
struct Trace {
    struct Entry {
        enum class Kind { state, line };
        Kind kind;
        std::string text;  // state: "{...}" snapshot; line: verbatim source line

        bool operator==(const Entry&) const = default;
    };

    std::vector<Entry> entries;
    std::optional<std::string> error_text;  // "ErrorType: message"
    long long step_count = 0;               // statements that finished executing

    bool ok() const { return !error_text.has_value(); }
    std::size_t line_entry_count() const;
    const Entry* final_state() const;  // last state entry, nullptr if none

    // step_count is bookkeeping, not part of trace identity.
    bool operator==(const Trace& other) const {
        return entries == other.entries && error_text == other.error_text;
    }
};

// One entry per line: "state: {...}" / "line: <verbatim source line>", the
// error text (if any) last. No trailing newline.
std::string render_trace(const Trace& t);

// Inverse of render_trace, tolerant of model output: a final line with neither
// prefix becomes error_text. Throws MalformedTrace on anything else
// (unknown prefix mid-trace, broken alternation, leading non-state entry).
Trace parse_trace(std::string_view text);

}  // namespace scratchpad::pysub
