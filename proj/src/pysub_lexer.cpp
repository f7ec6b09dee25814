#include "scratchpad/errors.hpp"
#include "scratchpad/pysub_frontend.hpp"

#include <array>
#include <cctype>

namespace scratchpad::pysub {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_keyword(std::string_view word) {
    static constexpr std::array<std::string_view, 15> kw = {
        "def", "return", "while", "if", "elif", "else", "for", "in",
        "pass", "not", "and", "or", "True", "False", "None"};
    for (auto k : kw) {
        if (k == word) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> split_source_lines(std::string_view source) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t nl = source.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < source.size()) lines.emplace_back(source.substr(start));
            break;
        }
        lines.emplace_back(source.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::vector<Token> tokenize(std::string_view source) {
    const std::vector<std::string> lines = split_source_lines(source);
    std::vector<Token> out;
    std::vector<int> indents{0};

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        const int line_no = static_cast<int>(li) + 1;

        std::size_t i = 0;
        while (i < line.size() && line[i] == ' ') ++i;
        if (i < line.size() && line[i] == '\t') {
            throw LexError(line_no, static_cast<int>(i) + 1, "tab character in indentation");
        }
        if (i == line.size() || line[i] == '#') continue;  // blank or comment-only line

        const int indent = static_cast<int>(i);
        if (indent > indents.back()) {
            if (indent != indents.back() + 2) {
                throw LexError(line_no, 1, "indentation must deepen by exactly 2 spaces");
            }
            indents.push_back(indent);
            out.push_back({TokKind::indent, "", line_no, 1});
        } else {
            while (indent < indents.back()) {
                indents.pop_back();
                out.push_back({TokKind::dedent, "", line_no, 1});
            }
            if (indent != indents.back()) {
                throw LexError(line_no, 1, "dedent does not match any outer indentation level");
            }
        }

        while (i < line.size()) {
            const char c = line[i];
            const int col = static_cast<int>(i) + 1;
            if (c == ' ') {
                ++i;
                continue;
            }
            if (c == '\t') throw LexError(line_no, col, "tab character");
            if (c == '#') break;  // trailing comment
            if (is_ident_start(c)) {
                std::size_t j = i + 1;
                while (j < line.size() && is_ident_char(line[j])) ++j;
                std::string word = line.substr(i, j - i);
                out.push_back({is_keyword(word) ? TokKind::keyword : TokKind::ident,
                               std::move(word), line_no, col});
                i = j;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i + 1;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
                if (j < line.size() && is_ident_start(line[j])) {
                    throw LexError(line_no, static_cast<int>(j) + 1, "invalid literal suffix");
                }
                out.push_back({TokKind::int_lit, line.substr(i, j - i), line_no, col});
                i = j;
                continue;
            }
            if (c == '"' || c == '\'') {
                std::string text;
                std::size_t j = i + 1;
                bool closed = false;
                while (j < line.size()) {
                    char d = line[j];
                    if (d == '\\') {
                        if (j + 1 >= line.size()) break;
                        char e = line[j + 1];
                        switch (e) {
                            case 'n': text += '\n'; break;
                            case 't': text += '\t'; break;
                            case '\\': text += '\\'; break;
                            case '\'': text += '\''; break;
                            case '"': text += '"'; break;
                            default:
                                throw LexError(line_no, static_cast<int>(j) + 2,
                                               "unknown string escape");
                        }
                        j += 2;
                        continue;
                    }
                    if (d == c) {
                        closed = true;
                        ++j;
                        break;
                    }
                    text += d;
                    ++j;
                }
                if (!closed) throw LexError(line_no, col, "unterminated string literal");
                out.push_back({TokKind::str_lit, std::move(text), line_no, col});
                i = j;
                continue;
            }
            // Longest operator first.
            static constexpr std::array<std::string_view, 1> ops3 = {"//="};
            static constexpr std::array<std::string_view, 10> ops2 = {
                "+=", "-=", "*=", "%=", "//", "**", "==", "!=", "<=", ">="};
            static constexpr std::string_view ops1 = "+-*%<>=()[],:";
            std::string_view rest(line);
            rest.remove_prefix(i);
            bool matched = false;
            for (auto op : ops3) {
                if (rest.starts_with(op)) {
                    out.push_back({TokKind::op, std::string(op), line_no, col});
                    i += op.size();
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
            for (auto op : ops2) {
                if (rest.starts_with(op)) {
                    out.push_back({TokKind::op, std::string(op), line_no, col});
                    i += op.size();
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
            if (ops1.find(c) != std::string_view::npos) {
                out.push_back({TokKind::op, std::string(1, c), line_no, col});
                ++i;
                continue;
            }
            throw LexError(line_no, col, std::string("illegal character '") + c + "'");
        }
        out.push_back({TokKind::newline, "", line_no, static_cast<int>(line.size()) + 1});
    }

    const int end_line = static_cast<int>(lines.size()) + 1;
    while (indents.back() > 0) {
        indents.pop_back();
        out.push_back({TokKind::dedent, "", end_line, 1});
    }
    out.push_back({TokKind::eof, "", end_line, 1});
    return out;
}

}  // namespace scratchpad::pysub
