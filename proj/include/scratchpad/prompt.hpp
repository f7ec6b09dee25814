#pragma once

#include <string>
#include <vector>

namespace scratchpad {

struct PromptShot {
    std::string program;  // function definition text, no trailing newline
    std::string harness;  // "output = f(6)"
    std::string trace;    // rendered trace text, no trailing newline
};

// Few-shot tracing prompt. Each shot renders as
//
//   Consider the following Python function:
//
//   {program}
//
//   {harness}
//
//   What is the execution trace?
//
//   [BEGIN]
//
//   {trace}
//
//   [DONE]
//
// followed by a blank line; the query block stops after "[BEGIN]".
std::string build_fewshot_prompt(const std::vector<PromptShot>& shots,
                                 const std::string& query_program,
                                 const std::string& query_harness);

}  // namespace scratchpad
