#pragma once

#include <stdexcept>
#include <string>

namespace scratchpad {

// Data errors carry the 1-based line number of the offending input line.

struct MalformedScratchpad : std::runtime_error {
    int line;
    MalformedScratchpad(int line_, const std::string& what_)
        : std::runtime_error("malformed scratchpad at line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

struct MalformedTrace : std::runtime_error {
    int line;
    MalformedTrace(int line_, const std::string& what_)
        : std::runtime_error("malformed trace at line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

struct LexError : std::runtime_error {
    int line;
    int col;
    LexError(int line_, int col_, const std::string& what_)
        : std::runtime_error("lex error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                             ": " + what_),
          line(line_), col(col_) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

struct ValueParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
    int line;
    SchemaError(int line_, const std::string& what_)
        : std::runtime_error("schema error at line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SamplingExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenerationExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicatePrediction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingFinalState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownFunction : std::invalid_argument {
    explicit UnknownFunction(const std::string& name)
        : std::invalid_argument("program does not define function '" + name + "'") {}
};

}  // namespace scratchpad
