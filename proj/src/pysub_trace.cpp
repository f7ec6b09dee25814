#include "scratchpad/pysub_trace.hpp"

#include "scratchpad/errors.hpp"

namespace scratchpad::pysub {

std::size_t Trace::line_entry_count() const {
    std::size_t n = 0;
    for (const Entry& e : entries) {
        if (e.kind == Entry::Kind::line) ++n;
    }
    return n;
}

const Trace::Entry* Trace::final_state() const {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (it->kind == Entry::Kind::state) return &*it;
    }
    return nullptr;
}

std::string render_trace(const Trace& t) {
    std::string out;
    for (const Trace::Entry& e : t.entries) {
        if (!out.empty()) out += '\n';
        out += e.kind == Trace::Entry::Kind::state ? "state: " : "line: ";
        out += e.text;
    }
    if (t.error_text) {
        if (!out.empty()) out += '\n';
        out += *t.error_text;
    }
    return out;
}

Trace parse_trace(std::string_view text) {
    Trace t;
    std::size_t start = 0;
    int line_no = 0;
    std::vector<std::pair<int, std::string>> raw_lines;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        ++line_no;
        raw_lines.emplace_back(line_no, std::string(line));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    // A single trailing newline is tolerated.
    while (!raw_lines.empty() && raw_lines.back().second.empty()) raw_lines.pop_back();
    if (raw_lines.empty()) throw MalformedTrace(1, "empty trace");

    for (std::size_t i = 0; i < raw_lines.size(); ++i) {
        const auto& [no, line] = raw_lines[i];
        if (line.starts_with("state: ")) {
            t.entries.push_back({Trace::Entry::Kind::state, line.substr(7)});
        } else if (line.starts_with("line: ")) {
            t.entries.push_back({Trace::Entry::Kind::line, line.substr(6)});
        } else if (i + 1 == raw_lines.size()) {
            t.error_text = line;  // terminal error line
        } else {
            throw MalformedTrace(no, "expected 'state: ' or 'line: ' prefix");
        }
    }

    if (t.entries.empty()) throw MalformedTrace(1, "trace has no entries");
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        const auto expected =
            i % 2 == 0 ? Trace::Entry::Kind::state : Trace::Entry::Kind::line;
        if (t.entries[i].kind != expected) {
            throw MalformedTrace(static_cast<int>(i) + 1,
                                 "trace must alternate state and line entries, starting with state");
        }
    }
    t.step_count = static_cast<long long>(t.line_entry_count());
    return t;
}

}  // namespace scratchpad::pysub
