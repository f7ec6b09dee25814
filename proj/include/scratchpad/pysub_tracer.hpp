#pragma once

#include "scratchpad/pysub_ast.hpp"
#include "scratchpad/pysub_ops.hpp"
#include "scratchpad/pysub_trace.hpp"

#include <string>
#include <vector>

namespace scratchpad::pysub {

// "output = f(6)" — the call line driving a traced run.
std::string harness_line(const std::string& fn_name, const std::vector<Value>& inputs);

// Executes prog's top level followed by the harness call and records the
// trace: one state/line pair per executed statement (loop and if/elif headers
// re-appear at every condition evaluation; the state after a call line is the
// callee frame, the state after a return line is the caller frame), closing
// with the global frame binding `output`. Runtime faults do not raise: the
// failing line is followed by a terminal error_text and the trace ends.
// Throws UnknownFunction if prog does not define fn_name.
//
// Values have copy semantics (no CPython aliasing), and a state is emitted
// after nested `def` lines just like top-level ones.
Trace trace(const Program& prog, const std::string& fn_name, const std::vector<Value>& inputs,
            const Limits& limits = {});

}  // namespace scratchpad::pysub
