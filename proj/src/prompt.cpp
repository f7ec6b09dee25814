#include "scratchpad/prompt.hpp"

namespace scratchpad {

namespace {

void append_query_block(std::string& out, const std::string& program, const std::string& harness) {
    out += "Consider the following Python function:\n\n";
    out += program;
    out += "\n\n";
    out += harness;
    out += "\n\nWhat is the execution trace?\n\n[BEGIN]\n";
}

}  // namespace

std::string build_fewshot_prompt(const std::vector<PromptShot>& shots,
                                 const std::string& query_program,
                                 const std::string& query_harness) {
    std::string out;
    for (const PromptShot& shot : shots) {
        append_query_block(out, shot.program, shot.harness);
        out += '\n';
        out += shot.trace;
        out += "\n\n[DONE]\n\n";
    }
    append_query_block(out, query_program, query_harness);
    return out;
}

}  // namespace scratchpad
