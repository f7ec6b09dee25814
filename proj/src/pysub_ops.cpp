#include "scratchpad/pysub_ops.hpp"

#include <algorithm>

namespace scratchpad::pysub {

namespace {

constexpr long long kMaxSequence = 1000000;

bool is_number(const Value& v) { return v.is_int() || v.is_bool(); }

BigInt to_int(const Value& v) {
    if (v.is_bool()) return BigInt(v.as_bool() ? 1 : 0);
    return v.as_int();
}

[[noreturn]] void fault(std::string kind, std::string message) {
    throw FaultSignal{Fault{std::move(kind), std::move(message)}};
}

[[noreturn]] void unsupported_operands(std::string_view op, const Value& lhs, const Value& rhs) {
    fault("TypeError", "unsupported operand type(s) for " + std::string(op) + ": '" +
                           type_name(lhs) + "' and '" + type_name(rhs) + "'");
}

std::string_view op_symbol(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return "+";
        case BinaryOp::sub: return "-";
        case BinaryOp::mul: return "*";
        case BinaryOp::floordiv: return "//";
        case BinaryOp::mod: return "%";
        case BinaryOp::pow: return "**";
    }
    return "?";
}

std::string_view cmp_symbol(CompareOp op) {
    switch (op) {
        case CompareOp::lt: return "<";
        case CompareOp::gt: return ">";
        case CompareOp::le: return "<=";
        case CompareOp::ge: return ">=";
        case CompareOp::eq: return "==";
        case CompareOp::ne: return "!=";
    }
    return "?";
}

// Floor division/modulo, Python sign rules.
void floor_divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    q = a / b;  // truncates toward zero
    r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) {
        q -= 1;
        r += b;
    }
}

Value repeat_str(const std::string& s, const BigInt& count) {
    if (count <= 0 || s.empty()) return Value::of_str("");
    if (count * static_cast<long long>(s.size()) > kMaxSequence) {
        fault("StepLimitExceeded", "sequence repetition too large");
    }
    const long long n = count.convert_to<long long>();
    std::string out;
    out.reserve(s.size() * static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) out += s;
    return Value::of_str(std::move(out));
}

Value repeat_list(const ValueList& l, const BigInt& count) {
    if (count <= 0 || l.empty()) return Value::of_list({});
    if (count * static_cast<long long>(l.size()) > kMaxSequence) {
        fault("StepLimitExceeded", "sequence repetition too large");
    }
    const long long n = count.convert_to<long long>();
    ValueList out;
    out.reserve(l.size() * static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) out.insert(out.end(), l.begin(), l.end());
    return Value::of_list(std::move(out));
}

// Three-way ordering; faults on unordered kind pairs.
int order_values(std::string_view op, const Value& a, const Value& b) {
    if (is_number(a) && is_number(b)) {
        const BigInt x = to_int(a);
        const BigInt y = to_int(b);
        return x < y ? -1 : x > y ? 1 : 0;
    }
    if (a.is_str() && b.is_str()) {
        return a.as_str() < b.as_str() ? -1 : a.as_str() > b.as_str() ? 1 : 0;
    }
    if (a.is_list() && b.is_list()) {
        const ValueList& x = a.as_list();
        const ValueList& y = b.as_list();
        for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
            if (!values_equal(x[i], y[i])) return order_values(op, x[i], y[i]);
        }
        return x.size() < y.size() ? -1 : x.size() > y.size() ? 1 : 0;
    }
    fault("TypeError", "'" + std::string(op) + "' not supported between instances of '" +
                           type_name(a) + "' and '" + type_name(b) + "'");
}

}  // namespace

std::string type_name(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::int_v: return "int";
        case Value::Kind::bool_v: return "bool";
        case Value::Kind::str_v: return "str";
        case Value::Kind::list_v: return "list";
        case Value::Kind::none_v: return "NoneType";
        case Value::Kind::callable_v: return "function";
        case Value::Kind::opaque_v: return "object";
    }
    return "object";
}

bool values_equal(const Value& a, const Value& b) {
    if (is_number(a) && is_number(b)) return to_int(a) == to_int(b);
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Value::Kind::str_v: return a.as_str() == b.as_str();
        case Value::Kind::none_v: return true;
        case Value::Kind::callable_v: return a.as_callable().name == b.as_callable().name;
        case Value::Kind::opaque_v: return a.as_opaque().name == b.as_opaque().name;
        case Value::Kind::list_v: {
            const ValueList& x = a.as_list();
            const ValueList& y = b.as_list();
            if (x.size() != y.size()) return false;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (!values_equal(x[i], y[i])) return false;
            }
            return true;
        }
        default: return false;  // unreachable: numbers handled above
    }
}

bool truthy(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::int_v: return v.as_int() != 0;
        case Value::Kind::bool_v: return v.as_bool();
        case Value::Kind::str_v: return !v.as_str().empty();
        case Value::Kind::list_v: return !v.as_list().empty();
        case Value::Kind::none_v: return false;
        default: return true;
    }
}

Value apply_binary(BinaryOp op, const Value& lhs, const Value& rhs) {
    switch (op) {
        case BinaryOp::add:
            if (is_number(lhs) && is_number(rhs)) return Value::of_int(to_int(lhs) + to_int(rhs));
            if (lhs.is_str() && rhs.is_str()) return Value::of_str(lhs.as_str() + rhs.as_str());
            if (lhs.is_list() && rhs.is_list()) {
                ValueList out = lhs.as_list();
                out.insert(out.end(), rhs.as_list().begin(), rhs.as_list().end());
                return Value::of_list(std::move(out));
            }
            unsupported_operands("+", lhs, rhs);
        case BinaryOp::sub:
            if (is_number(lhs) && is_number(rhs)) return Value::of_int(to_int(lhs) - to_int(rhs));
            unsupported_operands("-", lhs, rhs);
        case BinaryOp::mul:
            if (is_number(lhs) && is_number(rhs)) return Value::of_int(to_int(lhs) * to_int(rhs));
            if (lhs.is_str() && is_number(rhs)) return repeat_str(lhs.as_str(), to_int(rhs));
            if (is_number(lhs) && rhs.is_str()) return repeat_str(rhs.as_str(), to_int(lhs));
            if (lhs.is_list() && is_number(rhs)) return repeat_list(lhs.as_list(), to_int(rhs));
            if (is_number(lhs) && rhs.is_list()) return repeat_list(rhs.as_list(), to_int(lhs));
            unsupported_operands("*", lhs, rhs);
        case BinaryOp::floordiv:
        case BinaryOp::mod: {
            if (!is_number(lhs) || !is_number(rhs)) unsupported_operands(op_symbol(op), lhs, rhs);
            const BigInt b = to_int(rhs);
            if (b == 0) fault("ZeroDivisionError", "integer division or modulo by zero");
            BigInt q, r;
            floor_divmod(to_int(lhs), b, q, r);
            return Value::of_int(op == BinaryOp::floordiv ? q : r);
        }
        case BinaryOp::pow: {
            if (!is_number(lhs) || !is_number(rhs)) unsupported_operands("**", lhs, rhs);
            const BigInt base = to_int(lhs);
            const BigInt exp = to_int(rhs);
            if (exp < 0) {
                // Floats are outside the value domain, so negative exponents
                // cannot be honored.
                fault("TypeError", "integer pow() with negative exponent");
            }
            if (base == 0) return Value::of_int(exp == 0 ? 1 : 0);
            if (base == 1) return Value::of_int(1);
            if (base == -1) return Value::of_int(exp % 2 == 0 ? 1 : -1);
            if (exp > kMaxSequence) fault("StepLimitExceeded", "pow() exponent too large");
            BigInt result = 1;
            BigInt b = base;
            unsigned long long e = exp.convert_to<unsigned long long>();
            while (e > 0) {
                if (e & 1ULL) result *= b;
                e >>= 1ULL;
                if (e > 0) b *= b;
            }
            return Value::of_int(std::move(result));
        }
    }
    unsupported_operands(op_symbol(op), lhs, rhs);
}

Value apply_compare(CompareOp op, const Value& lhs, const Value& rhs) {
    switch (op) {
        case CompareOp::eq: return Value::of_bool(values_equal(lhs, rhs));
        case CompareOp::ne: return Value::of_bool(!values_equal(lhs, rhs));
        default: break;
    }
    const int c = order_values(cmp_symbol(op), lhs, rhs);
    switch (op) {
        case CompareOp::lt: return Value::of_bool(c < 0);
        case CompareOp::gt: return Value::of_bool(c > 0);
        case CompareOp::le: return Value::of_bool(c <= 0);
        case CompareOp::ge: return Value::of_bool(c >= 0);
        default: return Value::of_bool(false);  // unreachable
    }
}

Value apply_unary(UnaryOp op, const Value& operand) {
    if (op == UnaryOp::logical_not) return Value::of_bool(!truthy(operand));
    if (is_number(operand)) return Value::of_int(-to_int(operand));
    fault("TypeError", "bad operand type for unary -: '" + type_name(operand) + "'");
}

Value index_value(const Value& base, const Value& index) {
    if (base.is_list()) {
        if (!is_number(index)) {
            fault("TypeError",
                  "list indices must be integers or slices, not " + type_name(index));
        }
        const ValueList& l = base.as_list();
        BigInt i = to_int(index);
        if (i < 0) i += static_cast<long long>(l.size());
        if (i < 0 || i >= static_cast<long long>(l.size())) {
            fault("IndexError", "list index out of range");
        }
        return l[i.convert_to<std::size_t>()];
    }
    if (base.is_str()) {
        if (!is_number(index)) fault("TypeError", "string indices must be integers");
        const std::string& s = base.as_str();
        BigInt i = to_int(index);
        if (i < 0) i += static_cast<long long>(s.size());
        if (i < 0 || i >= static_cast<long long>(s.size())) {
            fault("IndexError", "string index out of range");
        }
        return Value::of_str(std::string(1, s[i.convert_to<std::size_t>()]));
    }
    fault("TypeError", "'" + type_name(base) + "' object is not subscriptable");
}

Value& index_slot(Value& base, const Value& index) {
    if (!base.is_list()) {
        fault("TypeError", "'" + type_name(base) + "' object does not support item assignment");
    }
    if (!is_number(index)) {
        fault("TypeError", "list indices must be integers or slices, not " + type_name(index));
    }
    ValueList& l = base.as_list();
    BigInt i = to_int(index);
    if (i < 0) i += static_cast<long long>(l.size());
    if (i < 0 || i >= static_cast<long long>(l.size())) {
        fault("IndexError", "list assignment index out of range");
    }
    return l[i.convert_to<std::size_t>()];
}

void store_index(Value& base, const Value& index, Value element) {
    index_slot(base, index) = std::move(element);
}

Value builtin_len(const std::vector<Value>& args) {
    if (args.size() != 1) {
        fault("TypeError",
              "len() takes exactly one argument (" + std::to_string(args.size()) + " given)");
    }
    const Value& v = args[0];
    if (v.is_str()) return Value::of_int(static_cast<long long>(v.as_str().size()));
    if (v.is_list()) return Value::of_int(static_cast<long long>(v.as_list().size()));
    fault("TypeError", "object of type '" + type_name(v) + "' has no len()");
}

Value builtin_range(const std::vector<Value>& args, const Limits& limits) {
    if (args.empty()) fault("TypeError", "range expected at least 1 argument, got 0");
    if (args.size() > 3) {
        fault("TypeError",
              "range expected at most 3 arguments, got " + std::to_string(args.size()));
    }
    for (const Value& a : args) {
        if (!is_number(a)) {
            fault("TypeError", "'" + type_name(a) + "' object cannot be interpreted as an integer");
        }
    }
    BigInt start = 0, stop, step = 1;
    if (args.size() == 1) {
        stop = to_int(args[0]);
    } else {
        start = to_int(args[0]);
        stop = to_int(args[1]);
        if (args.size() == 3) step = to_int(args[2]);
    }
    // ValueError is outside the fault taxonomy; TypeError is the nearest kind.
    if (step == 0) fault("TypeError", "range() arg 3 must not be zero");

    BigInt count = 0;
    if (step > 0 && stop > start) count = (stop - start + step - 1) / step;
    if (step < 0 && stop < start) count = (start - stop - step - 1) / (-step);
    if (count > limits.max_range_length) fault("StepLimitExceeded", "range result too large");

    ValueList out;
    out.reserve(count.convert_to<std::size_t>());
    BigInt v = start;
    for (BigInt i = 0; i < count; ++i) {
        out.push_back(Value::of_int(v));
        v += step;
    }
    return Value::of_list(std::move(out));
}

Fault step_limit_fault() { return Fault{"StepLimitExceeded", "maximum step count exceeded"}; }

Fault recursion_limit_fault() {
    return Fault{"StepLimitExceeded", "maximum recursion depth exceeded"};
}

}  // namespace scratchpad::pysub
