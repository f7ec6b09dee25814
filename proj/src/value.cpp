#include "scratchpad/value.hpp"

#include "scratchpad/errors.hpp"

#include <cctype>

namespace scratchpad {

namespace {

void escape_into(std::string& out, const std::string& s, char quote) {
    for (char c : s) {
        if (c == '\\') {
            out += "\\\\";
        } else if (c == quote) {
            out += '\\';
            out += quote;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
}

}  // namespace

std::string encode_value(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::int_v:
            return v.as_int().str();
        case Value::Kind::bool_v:
            return v.as_bool() ? "true" : "false";
        case Value::Kind::str_v: {
            std::string out = "\"";
            escape_into(out, v.as_str(), '"');
            out += '"';
            return out;
        }
        case Value::Kind::list_v: {
            std::string out = "[";
            bool first = true;
            for (const Value& e : v.as_list()) {
                if (!first) out += ", ";
                first = false;
                out += encode_value(e);
            }
            out += ']';
            return out;
        }
        case Value::Kind::none_v:
            return "null";
        case Value::Kind::callable_v:
            return "\"<callable_object " + v.as_callable().name + ">\"";
        case Value::Kind::opaque_v:
            return "\"<object " + v.as_opaque().name + ">\"";
    }
    return "null";
}

std::string encode_state(const Frame& frame) {
    std::string out = "{";
    bool first = true;
    for (const auto& [name, value] : frame.bindings()) {
        if (!first) out += ", ";
        first = false;
        out += '"';
        out += name;
        out += "\": ";
        out += encode_value(value);
    }
    out += '}';
    return out;
}

std::string repr_value(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::int_v:
            return v.as_int().str();
        case Value::Kind::bool_v:
            return v.as_bool() ? "True" : "False";
        case Value::Kind::str_v: {
            std::string out = "'";
            for (char c : v.as_str()) {
                switch (c) {
                    case '\\': out += "\\\\"; break;
                    case '\'': out += "\\'"; break;
                    case '\n': out += "\\n"; break;
                    case '\t': out += "\\t"; break;
                    default: out += c; break;
                }
            }
            out += '\'';
            return out;
        }
        case Value::Kind::list_v: {
            std::string out = "[";
            bool first = true;
            for (const Value& e : v.as_list()) {
                if (!first) out += ", ";
                first = false;
                out += repr_value(e);
            }
            out += ']';
            return out;
        }
        case Value::Kind::none_v:
            return "None";
        case Value::Kind::callable_v:
            return "<callable_object " + v.as_callable().name + ">";
        case Value::Kind::opaque_v:
            return "<object " + v.as_opaque().name + ">";
    }
    return "None";
}

std::string source_literal(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::bool_v:
            return v.as_bool() ? "True" : "False";
        case Value::Kind::none_v:
            return "None";
        case Value::Kind::list_v: {
            std::string out = "[";
            bool first = true;
            for (const Value& e : v.as_list()) {
                if (!first) out += ", ";
                first = false;
                out += source_literal(e);
            }
            out += ']';
            return out;
        }
        default:
            return encode_value(v);
    }
}

// ---------------------------------------------------------------------------
// tolerant value / state parsing
// ---------------------------------------------------------------------------

namespace {

struct ValueScanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ValueParseError(what + " at offset " + std::to_string(pos) + " in value text");
    }

    bool try_consume(std::string_view word) {
        if (text.substr(pos, word.size()) == word) {
            pos += word.size();
            return true;
        }
        return false;
    }

    std::string parse_quoted(char quote) {
        ++pos;  // opening quote
        std::string out;
        while (true) {
            if (done()) fail("unterminated string");
            char c = text[pos++];
            if (c == quote) break;
            if (c == '\\') {
                if (done()) fail("dangling escape");
                char e = text[pos++];
                switch (e) {
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    case '\\': out += '\\'; break;
                    case '\'': out += '\''; break;
                    case '"': out += '"'; break;
                    default: fail(std::string("unknown escape \\") + e);
                }
            } else {
                out += c;
            }
        }
        return out;
    }

    Value parse_value() {
        skip_ws();
        if (done()) fail("empty value");
        char c = peek();
        if (c == '"' || c == '\'') {
            std::string s = parse_quoted(c);
            // Placeholder strings round-trip to their structured kinds.
            if (s.starts_with("<callable_object ") && s.ends_with(">")) {
                return Value::callable(s.substr(17, s.size() - 18));
            }
            if (s.starts_with("<object ") && s.ends_with(">")) {
                return Value::opaque(s.substr(8, s.size() - 9));
            }
            return Value::of_str(std::move(s));
        }
        if (c == '[') {
            ++pos;
            ValueList elems;
            skip_ws();
            if (!done() && peek() == ']') {
                ++pos;
                return Value::of_list(std::move(elems));
            }
            while (true) {
                elems.push_back(parse_value());
                skip_ws();
                if (done()) fail("unterminated list");
                if (peek() == ',') {
                    ++pos;
                    continue;
                }
                if (peek() == ']') {
                    ++pos;
                    break;
                }
                fail("expected ',' or ']' in list");
            }
            return Value::of_list(std::move(elems));
        }
        if (try_consume("true")) return Value::of_bool(true);
        if (try_consume("false")) return Value::of_bool(false);
        if (try_consume("True")) return Value::of_bool(true);
        if (try_consume("False")) return Value::of_bool(false);
        if (try_consume("null")) return Value::none();
        if (try_consume("None")) return Value::none();
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            if (c == '+' || c == '-') ++pos;
            std::size_t digits = 0;
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos;
                ++digits;
            }
            if (digits == 0) fail("expected digits");
            std::string_view body = text.substr(start, pos - start);
            BigInt n(std::string(body.front() == '+' ? body.substr(1) : body));
            return Value::of_int(std::move(n));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Frame parse_state_map() {
        skip_ws();
        if (done() || peek() != '{') fail("state must start with '{'");
        ++pos;
        Frame frame("<state>");
        skip_ws();
        if (!done() && peek() == '}') {
            ++pos;
            return frame;
        }
        while (true) {
            skip_ws();
            if (done() || (peek() != '"' && peek() != '\'')) fail("expected quoted key");
            std::string key = parse_quoted(peek());
            skip_ws();
            if (done() || peek() != ':') fail("expected ':' after key");
            ++pos;
            frame.set(key, parse_value());
            skip_ws();
            if (done()) fail("unterminated state map");
            if (peek() == ',') {
                ++pos;
                continue;
            }
            if (peek() == '}') {
                ++pos;
                break;
            }
            fail("expected ',' or '}' in state map");
        }
        return frame;
    }

    void expect_end(const char* what) {
        skip_ws();
        if (!done()) fail(std::string("trailing text after ") + what);
    }
};

}  // namespace

Value parse_value(std::string_view text) {
    ValueScanner s{text};
    Value v = s.parse_value();
    s.expect_end("value");
    return v;
}

Frame parse_state(std::string_view text) {
    ValueScanner s{text};
    Frame f = s.parse_state_map();
    s.expect_end("state");
    return f;
}

}  // namespace scratchpad
