#pragma once

#include "scratchpad/pysub_ast.hpp"

#include <string_view>
#include <vector>

namespace scratchpad::pysub {

// Indentation-aware token stream. Comments stripped, blank lines skipped,
// INDENT/DEDENT balanced over the program. Indentation is spaces only, in
// 2-space levels; tabs are rejected. Throws LexError.
std::vector<Token> tokenize(std::string_view source);

// Parses a token stream. source_lines is the verbatim line table the tokens
// came from (needed for trace emission). Throws ParseError.
Program parse(std::vector<Token> tokens, std::vector<std::string> source_lines);

// tokenize + parse in one call.
Program parse_program(std::string_view source);

std::vector<std::string> split_source_lines(std::string_view source);

}  // namespace scratchpad::pysub
