#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace scratchpad {

using BigInt = boost::multiprecision::cpp_int;

struct Value;
using ValueList = std::vector<Value>;

struct NoneTag {
    bool operator==(const NoneTag&) const = default;
};
// Functions and unrepresentable objects appear in states as placeholder
// strings; the name is all the encoding keeps.
struct CallableRef {
    std::string name;
    bool operator==(const CallableRef&) const = default;
};
struct OpaqueRef {
    std::string name;
    bool operator==(const OpaqueRef&) const = default;
};

// Runtime value of the traced language. Ints are arbitrary precision.
struct Value {
    using Data = std::variant<BigInt, bool, std::string, ValueList, NoneTag, CallableRef, OpaqueRef>;
    Data data;

    enum class Kind { int_v, bool_v, str_v, list_v, none_v, callable_v, opaque_v };
    Kind kind() const { return static_cast<Kind>(data.index()); }

    static Value of_int(BigInt v) { return Value{Data{std::move(v)}}; }
    static Value of_int(long long v) { return Value{Data{BigInt(v)}}; }
    static Value of_bool(bool v) { return Value{Data{v}}; }
    static Value of_str(std::string v) { return Value{Data{std::move(v)}}; }
    static Value of_list(ValueList v) { return Value{Data{std::move(v)}}; }
    static Value none() { return Value{Data{NoneTag{}}}; }
    static Value callable(std::string name) { return Value{Data{CallableRef{std::move(name)}}}; }
    static Value opaque(std::string name) { return Value{Data{OpaqueRef{std::move(name)}}}; }

    bool is_int() const { return kind() == Kind::int_v; }
    bool is_bool() const { return kind() == Kind::bool_v; }
    bool is_str() const { return kind() == Kind::str_v; }
    bool is_list() const { return kind() == Kind::list_v; }
    bool is_none() const { return kind() == Kind::none_v; }
    bool is_callable() const { return kind() == Kind::callable_v; }
    bool is_opaque() const { return kind() == Kind::opaque_v; }

    const BigInt& as_int() const { return std::get<BigInt>(data); }
    bool as_bool() const { return std::get<bool>(data); }
    const std::string& as_str() const { return std::get<std::string>(data); }
    const ValueList& as_list() const { return std::get<ValueList>(data); }
    ValueList& as_list() { return std::get<ValueList>(data); }
    const CallableRef& as_callable() const { return std::get<CallableRef>(data); }
    const OpaqueRef& as_opaque() const { return std::get<OpaqueRef>(data); }

    // Structural, kind-strict equality (1 != true != "1").
    bool operator==(const Value&) const = default;
};

// Local-variable bindings, ordered by first assignment; rebinding keeps the
// original position.
class Frame {
public:
    Frame() = default;
    explicit Frame(std::string context) : context_(std::move(context)) {}

    void set(const std::string& name, Value v) {
        for (auto& [k, val] : slots_) {
            if (k == name) {
                val = std::move(v);
                return;
            }
        }
        slots_.emplace_back(name, std::move(v));
    }

    const Value* find(const std::string& name) const {
        for (const auto& [k, v] : slots_) {
            if (k == name) return &v;
        }
        return nullptr;
    }

    Value* find(const std::string& name) {
        for (auto& [k, v] : slots_) {
            if (k == name) return &v;
        }
        return nullptr;
    }

    bool contains(const std::string& name) const { return find(name) != nullptr; }
    const std::vector<std::pair<std::string, Value>>& bindings() const { return slots_; }
    std::size_t size() const { return slots_.size(); }
    const std::string& context() const { return context_; }

    bool operator==(const Frame& other) const { return slots_ == other.slots_; }

private:
    std::string context_ = "<module>";
    std::vector<std::pair<std::string, Value>> slots_;
};

// Canonical JSON-flavored encoding used in trace states:
//   42, true, "text", [1, "a"], null, "<callable_object f>", "<object n>"
// Strings escape quote, backslash and newline only.
std::string encode_value(const Value& v);

// State snapshot: {"k1": v1, "k2": v2} in insertion order, {} when empty.
std::string encode_state(const Frame& frame);

// Python-repr-flavored encoding used by single-line records:
//   42, True, 'text', [1, 'a'], None
std::string repr_value(const Value& v);

// Source-literal form that parses back through the frontend:
//   42, True, "text", [1, "a"], None
std::string source_literal(const Value& v);

// Tolerant parse of an encoded value (either flavor): arbitrary spacing,
// signed ints, single- or double-quoted strings. "<callable_object f>" and
// "<object n>" map back to their Value kinds. Throws ValueParseError.
Value parse_value(std::string_view text);

// Tolerant parse of a state snapshot "{...}" into a Frame (keys kept in
// textual order). Throws ValueParseError.
Frame parse_state(std::string_view text);

}  // namespace scratchpad
