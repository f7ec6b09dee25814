#include "scratchpad/pysub_interp.hpp"

#include "scratchpad/errors.hpp"
#include "scratchpad/pysub_frontend.hpp"

#include <map>
#include <utility>

// Second execution engine, written independently of the tracer on purpose:
// free evaluation functions over an explicit machine state instead of the
// tracer's emit-driven walker. Only the pure value-ops layer is shared.

namespace scratchpad::pysub {

namespace {

struct Returned {
    Value value;
};

struct Machine {
    const Limits& limits;
    Frame* globals = nullptr;
    std::map<std::string, const Stmt::FuncDef*> defs;
    long long ticks = 0;

    void tick() {
        if (ticks == limits.max_steps) throw FaultSignal{step_limit_fault()};
        ++ticks;
    }
};

Value eval_expr(Machine& m, const Expr& e, Frame& env, int depth);

Value lookup(Machine& m, const std::string& name, Frame& env) {
    if (const Value* v = env.find(name)) return *v;
    if (m.globals && m.globals != &env) {
        if (const Value* v = m.globals->find(name)) return *v;
    }
    if (name == "len" || name == "range") return Value::callable(name);
    throw FaultSignal{Fault{"NameError", "name '" + name + "' is not defined"}};
}

Value& lookup_slot(Machine& m, const Expr& e, Frame& env, int depth) {
    if (const auto* var = e.get<Expr::Var>()) {
        if (Value* v = env.find(var->name)) return *v;
        if (m.globals && m.globals != &env) {
            if (Value* v = m.globals->find(var->name)) return *v;
        }
        throw FaultSignal{Fault{"NameError", "name '" + var->name + "' is not defined"}};
    }
    const auto* idx = e.get<Expr::Index>();
    Value& base = lookup_slot(m, *idx->base, env, depth);
    return index_slot(base, eval_expr(m, *idx->index, env, depth));
}

void run_block(Machine& m, const std::vector<StmtPtr>& body, Frame& env, int depth);

Value invoke(Machine& m, const Stmt::FuncDef& def, std::vector<Value> args, int depth) {
    if (args.size() != def.params.size()) {
        throw FaultSignal{Fault{
            "TypeError",
            def.name + "() takes " + std::to_string(def.params.size()) + " positional argument" +
                (def.params.size() == 1 ? "" : "s") + " but " + std::to_string(args.size()) +
                (args.size() == 1 ? " was given" : " were given")}};
    }
    if (depth + 1 > m.limits.max_depth) throw FaultSignal{recursion_limit_fault()};
    Frame locals(def.name);
    for (std::size_t i = 0; i < args.size(); ++i) locals.set(def.params[i], std::move(args[i]));
    try {
        run_block(m, def.body, locals, depth + 1);
    } catch (Returned& r) {
        return std::move(r.value);
    }
    return Value::none();
}

Value eval_expr(Machine& m, const Expr& e, Frame& env, int depth) {
    if (const auto* v = e.get<Expr::IntLit>()) return Value::of_int(v->value);
    if (const auto* v = e.get<Expr::StrLit>()) return Value::of_str(v->value);
    if (const auto* v = e.get<Expr::BoolLit>()) return Value::of_bool(v->value);
    if (e.get<Expr::NoneLit>()) return Value::none();
    if (const auto* v = e.get<Expr::ListLit>()) {
        ValueList out;
        out.reserve(v->elems.size());
        for (const ExprPtr& el : v->elems) out.push_back(eval_expr(m, *el, env, depth));
        return Value::of_list(std::move(out));
    }
    if (const auto* v = e.get<Expr::Var>()) return lookup(m, v->name, env);
    if (const auto* v = e.get<Expr::Unary>()) {
        return apply_unary(v->op, eval_expr(m, *v->operand, env, depth));
    }
    if (const auto* v = e.get<Expr::Binary>()) {
        Value lhs = eval_expr(m, *v->lhs, env, depth);
        Value rhs = eval_expr(m, *v->rhs, env, depth);
        return apply_binary(v->op, lhs, rhs);
    }
    if (const auto* v = e.get<Expr::Compare>()) {
        Value lhs = eval_expr(m, *v->lhs, env, depth);
        Value rhs = eval_expr(m, *v->rhs, env, depth);
        return apply_compare(v->op, lhs, rhs);
    }
    if (const auto* v = e.get<Expr::Logic>()) {
        Value lhs = eval_expr(m, *v->lhs, env, depth);
        const bool take_rhs = v->op == LogicOp::and_op ? truthy(lhs) : !truthy(lhs);
        return take_rhs ? eval_expr(m, *v->rhs, env, depth) : lhs;
    }
    if (const auto* v = e.get<Expr::Index>()) {
        Value base = eval_expr(m, *v->base, env, depth);
        Value index = eval_expr(m, *v->index, env, depth);
        return index_value(base, index);
    }
    const auto* call = e.get<Expr::Call>();
    Value callee = eval_expr(m, *call->callee, env, depth);
    std::vector<Value> args;
    args.reserve(call->args.size());
    for (const ExprPtr& a : call->args) args.push_back(eval_expr(m, *a, env, depth));
    if (!callee.is_callable()) {
        throw FaultSignal{Fault{"TypeError", "'" + type_name(callee) + "' object is not callable"}};
    }
    const std::string& name = callee.as_callable().name;
    if (auto it = m.defs.find(name); it != m.defs.end()) {
        return invoke(m, *it->second, std::move(args), depth);
    }
    if (name == "len") return builtin_len(args);
    if (name == "range") return builtin_range(args, m.limits);
    throw FaultSignal{Fault{"NameError", "name '" + name + "' is not defined"}};
}

ValueList iterable_items(Machine& m, const Expr& e, Frame& env, int depth) {
    Value v = eval_expr(m, e, env, depth);
    if (v.is_list()) return v.as_list();
    if (v.is_str()) {
        ValueList out;
        for (char c : v.as_str()) out.push_back(Value::of_str(std::string(1, c)));
        return out;
    }
    throw FaultSignal{Fault{"TypeError", "'" + type_name(v) + "' object is not iterable"}};
}

void run_stmt(Machine& m, const Stmt& stmt, Frame& env, int depth) {
    if (const auto* def = stmt.get<Stmt::FuncDef>()) {
        m.tick();
        m.defs[def->name] = def;
        env.set(def->name, Value::callable(def->name));
        return;
    }
    if (const auto* assign = stmt.get<Stmt::Assign>()) {
        m.tick();
        Value v = eval_expr(m, *assign->value, env, depth);
        if (const auto* var = assign->target->get<Expr::Var>()) {
            env.set(var->name, std::move(v));
        } else {
            const auto* idx = assign->target->get<Expr::Index>();
            Value& base = lookup_slot(m, *idx->base, env, depth);
            store_index(base, eval_expr(m, *idx->index, env, depth), std::move(v));
        }
        return;
    }
    if (const auto* aug = stmt.get<Stmt::AugAssign>()) {
        m.tick();
        if (const auto* var = aug->target->get<Expr::Var>()) {
            Value cur = lookup(m, var->name, env);
            Value rhs = eval_expr(m, *aug->value, env, depth);
            env.set(var->name, apply_binary(aug->op, cur, rhs));
        } else {
            const auto* idx = aug->target->get<Expr::Index>();
            Value& base = lookup_slot(m, *idx->base, env, depth);
            Value index = eval_expr(m, *idx->index, env, depth);
            Value cur = index_value(base, index);
            Value rhs = eval_expr(m, *aug->value, env, depth);
            store_index(base, index, apply_binary(aug->op, cur, rhs));
        }
        return;
    }
    if (const auto* ifs = stmt.get<Stmt::If>()) {
        for (const Stmt::IfArm& arm : ifs->arms) {
            m.tick();
            if (truthy(eval_expr(m, *arm.cond, env, depth))) {
                run_block(m, arm.body, env, depth);
                return;
            }
        }
        run_block(m, ifs->else_body, env, depth);
        return;
    }
    if (const auto* wh = stmt.get<Stmt::While>()) {
        for (;;) {
            m.tick();
            if (!truthy(eval_expr(m, *wh->cond, env, depth))) return;
            run_block(m, wh->body, env, depth);
        }
    }
    if (const auto* fr = stmt.get<Stmt::ForRange>()) {
        std::optional<ValueList> items;
        std::size_t next = 0;
        for (;;) {
            m.tick();
            if (!items) items = iterable_items(m, *fr->iterable, env, depth);
            if (next == items->size()) return;
            env.set(fr->var, (*items)[next++]);
            run_block(m, fr->body, env, depth);
        }
    }
    if (const auto* ret = stmt.get<Stmt::Return>()) {
        m.tick();
        throw Returned{ret->value ? eval_expr(m, *ret->value, env, depth) : Value::none()};
    }
    if (stmt.get<Stmt::Pass>()) {
        m.tick();
        return;
    }
    const auto* es = stmt.get<Stmt::ExprStmt>();
    m.tick();
    eval_expr(m, *es->expr, env, depth);
}

void run_block(Machine& m, const std::vector<StmtPtr>& body, Frame& env, int depth) {
    for (const StmtPtr& stmt : body) run_stmt(m, *stmt, env, depth);
}

}  // namespace

RunResult run_direct(const Program& prog, const std::string& fn_name,
                     const std::vector<Value>& inputs, const Limits& limits) {
    if (!prog.functions.contains(fn_name)) throw UnknownFunction(fn_name);
    Machine m{limits};
    Frame globals("<module>");
    m.globals = &globals;
    RunResult result;
    try {
        run_block(m, prog.body, globals, 0);
        m.tick();  // the harness call line
        result.value = invoke(m, *prog.functions.at(fn_name), inputs, 0);
    } catch (FaultSignal& f) {
        result.fault = std::move(f.fault);
    }
    return result;
}

StepOutcome single_line_step(const Frame& init, std::string_view stmt_src, const Limits& limits) {
    Program prog = parse_program(stmt_src);
    if (prog.body.size() != 1) {
        throw ParseError(static_cast<int>(prog.source_lines.size()),
                         "expected a single statement");
    }
    Machine m{limits};
    Frame frame = init;
    m.globals = &frame;
    StepOutcome out;
    try {
        run_stmt(m, *prog.body.front(), frame, 0);
        out.frame = std::move(frame);
    } catch (FaultSignal& f) {
        out.fault = std::move(f.fault);
    }
    return out;
}

}  // namespace scratchpad::pysub
