#pragma once

#include "scratchpad/pysub_ast.hpp"
#include "scratchpad/value.hpp"

#include <string>
#include <vector>

namespace scratchpad::pysub {

// Runtime fault. kind is one of the stable taxonomy names:
// ZeroDivisionError, IndexError, NameError, TypeError, StepLimitExceeded.
struct Fault {
    std::string kind;
    std::string message;

    std::string text() const { return kind + ": " + message; }
    bool operator==(const Fault&) const = default;
};

// Thrown inside the evaluators, converted to a Fault at the boundary.
struct FaultSignal {
    Fault fault;
};

struct Limits {
    long long max_steps = 10000;       // executed statements, loop headers included
    int max_depth = 1000;              // user-call nesting
    long long max_range_length = 1000000;
};

// Python type name used in fault messages ('int', 'str', 'list', ...).
std::string type_name(const Value& v);

// Pure value semantics shared by both execution engines: Python arithmetic
// with arbitrary-precision ints, floor division/modulo, sequence concat and
// repeat, lexicographic ordering, truthiness and indexing. Faults are thrown
// as FaultSignal. No trace bookkeeping lives here.
Value apply_binary(BinaryOp op, const Value& lhs, const Value& rhs);
Value apply_compare(CompareOp op, const Value& lhs, const Value& rhs);
Value apply_unary(UnaryOp op, const Value& operand);
bool truthy(const Value& v);
bool values_equal(const Value& a, const Value& b);  // Python ==, bools as ints
Value index_value(const Value& base, const Value& index);
void store_index(Value& base, const Value& index, Value element);
Value& index_slot(Value& base, const Value& index);  // list element lvalue, for nested targets
Value builtin_len(const std::vector<Value>& args);
Value builtin_range(const std::vector<Value>& args, const Limits& limits);

Fault step_limit_fault();
Fault recursion_limit_fault();

}  // namespace scratchpad::pysub
