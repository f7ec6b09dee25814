#include "scratchpad/pysub_tracer.hpp"

#include "scratchpad/errors.hpp"

#include <map>
#include <utility>

namespace scratchpad::pysub {

std::string harness_line(const std::string& fn_name, const std::vector<Value>& inputs) {
    std::string out = "output = " + fn_name + "(";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (i > 0) out += ", ";
        out += source_literal(inputs[i]);
    }
    out += ')';
    return out;
}

namespace {

struct ReturnSignal {
    Value value;
};

class TraceEngine {
public:
    TraceEngine(const Program& prog, const Limits& limits) : prog_(prog), limits_(limits) {}

    Trace run(const std::string& fn_name, const std::vector<Value>& inputs) {
        Frame global("<module>");
        global_ = &global;
        try {
            for (const StmtPtr& stmt : prog_.body) exec_stmt(*stmt, global, 0);
            step(global, harness_line(fn_name, inputs));
            Value result = call_user(*prog_.functions.at(fn_name), inputs, 0);
            finish_step();
            global.set("output", std::move(result));
        } catch (FaultSignal& f) {
            trace_.error_text = f.fault.text();
        } catch (ReturnSignal&) {
            // `return` outside a function is rejected by the parser; a stray
            // signal here would be an engine bug.
            throw std::logic_error("return signal escaped to module level");
        }
        if (!trace_.error_text) trace_.entries.push_back(state_of(global));
        trace_.step_count = completed_;
        return trace_;
    }

private:
    const Program& prog_;
    const Limits& limits_;
    Trace trace_;
    Frame* global_ = nullptr;
    std::map<std::string, const Stmt::FuncDef*> registry_;
    long long attempted_ = 0;
    long long completed_ = 0;

    Trace::Entry state_of(const Frame& env) const {
        return {Trace::Entry::Kind::state, encode_state(env)};
    }

    // Line event: the state entry completes the previous statement, then the
    // statement's verbatim line is emitted.
    void step(const Frame& env, const std::string& line_text) {
        trace_.entries.push_back(state_of(env));
        trace_.entries.push_back({Trace::Entry::Kind::line, line_text});
        if (attempted_ == limits_.max_steps) throw FaultSignal{step_limit_fault()};
        ++attempted_;
    }

    void step(const Frame& env, int line) { step(env, prog_.line_text(line)); }

    void finish_step() { ++completed_; }

    void exec_block(const std::vector<StmtPtr>& body, Frame& env, int depth) {
        for (const StmtPtr& stmt : body) exec_stmt(*stmt, env, depth);
    }

    void exec_stmt(const Stmt& stmt, Frame& env, int depth) {
        if (const auto* def = stmt.get<Stmt::FuncDef>()) {
            step(env, stmt.line);
            registry_[def->name] = def;
            env.set(def->name, Value::callable(def->name));
            finish_step();
        } else if (const auto* assign = stmt.get<Stmt::Assign>()) {
            step(env, stmt.line);
            Value v = eval(*assign->value, env, depth);
            assign_target(*assign->target, std::move(v), env, depth);
            finish_step();
        } else if (const auto* aug = stmt.get<Stmt::AugAssign>()) {
            step(env, stmt.line);
            exec_aug_assign(*aug, env, depth);
            finish_step();
        } else if (const auto* ifs = stmt.get<Stmt::If>()) {
            for (const Stmt::IfArm& arm : ifs->arms) {
                step(env, arm.line);
                const bool taken = truthy(eval(*arm.cond, env, depth));
                finish_step();
                if (taken) {
                    exec_block(arm.body, env, depth);
                    return;
                }
            }
            // `else:` produces no line event.
            exec_block(ifs->else_body, env, depth);
        } else if (const auto* wh = stmt.get<Stmt::While>()) {
            for (;;) {
                step(env, stmt.line);
                const bool taken = truthy(eval(*wh->cond, env, depth));
                finish_step();
                if (!taken) break;
                exec_block(wh->body, env, depth);
            }
        } else if (const auto* fr = stmt.get<Stmt::ForRange>()) {
            std::optional<ValueList> items;
            std::size_t next = 0;
            for (;;) {
                step(env, stmt.line);
                if (!items) items = eval_iterable(*fr->iterable, env, depth);
                const bool more = next < items->size();
                if (more) env.set(fr->var, (*items)[next++]);
                finish_step();
                if (!more) break;
                exec_block(fr->body, env, depth);
            }
        } else if (const auto* ret = stmt.get<Stmt::Return>()) {
            step(env, stmt.line);
            Value v = ret->value ? eval(*ret->value, env, depth) : Value::none();
            finish_step();
            throw ReturnSignal{std::move(v)};
        } else if (stmt.get<Stmt::Pass>()) {
            step(env, stmt.line);
            finish_step();
        } else if (const auto* es = stmt.get<Stmt::ExprStmt>()) {
            step(env, stmt.line);
            eval(*es->expr, env, depth);
            finish_step();
        }
    }

    void exec_aug_assign(const Stmt::AugAssign& aug, Frame& env, int depth) {
        if (const auto* var = aug.target->get<Expr::Var>()) {
            Value cur = read_var(var->name, env);
            Value rhs = eval(*aug.value, env, depth);
            env.set(var->name, apply_binary(aug.op, cur, rhs));
            return;
        }
        const auto* idx = aug.target->get<Expr::Index>();
        Value& container = resolve_lvalue(*idx->base, env, depth);
        Value index = eval(*idx->index, env, depth);
        Value cur = index_value(container, index);
        Value rhs = eval(*aug.value, env, depth);
        store_index(container, index, apply_binary(aug.op, cur, rhs));
    }

    void assign_target(const Expr& target, Value v, Frame& env, int depth) {
        if (const auto* var = target.get<Expr::Var>()) {
            env.set(var->name, std::move(v));
            return;
        }
        const auto* idx = target.get<Expr::Index>();
        Value& container = resolve_lvalue(*idx->base, env, depth);
        Value index = eval(*idx->index, env, depth);
        store_index(container, index, std::move(v));
    }

    Value& resolve_lvalue(const Expr& e, Frame& env, int depth) {
        if (const auto* var = e.get<Expr::Var>()) {
            if (Value* v = env.find(var->name)) return *v;
            if (global_ != &env) {
                if (Value* v = global_->find(var->name)) return *v;
            }
            throw FaultSignal{Fault{"NameError", "name '" + var->name + "' is not defined"}};
        }
        const auto* idx = e.get<Expr::Index>();
        Value& base = resolve_lvalue(*idx->base, env, depth);
        Value index = eval(*idx->index, env, depth);
        return index_slot(base, index);
    }

    Value read_var(const std::string& name, Frame& env) {
        if (const Value* v = env.find(name)) return *v;
        if (global_ != &env) {
            if (const Value* v = global_->find(name)) return *v;
        }
        if (name == "len" || name == "range") return Value::callable(name);
        throw FaultSignal{Fault{"NameError", "name '" + name + "' is not defined"}};
    }

    ValueList eval_iterable(const Expr& e, Frame& env, int depth) {
        Value v = eval(e, env, depth);
        if (v.is_list()) return v.as_list();
        if (v.is_str()) {
            ValueList chars;
            for (char c : v.as_str()) chars.push_back(Value::of_str(std::string(1, c)));
            return chars;
        }
        throw FaultSignal{Fault{"TypeError", "'" + type_name(v) + "' object is not iterable"}};
    }

    Value call_user(const Stmt::FuncDef& def, std::vector<Value> args, int depth) {
        if (args.size() != def.params.size()) {
            const std::string takes =
                def.name + "() takes " + std::to_string(def.params.size()) +
                " positional argument" + (def.params.size() == 1 ? "" : "s") + " but " +
                std::to_string(args.size()) + (args.size() == 1 ? " was given" : " were given");
            throw FaultSignal{Fault{"TypeError", takes}};
        }
        if (depth + 1 > limits_.max_depth) throw FaultSignal{recursion_limit_fault()};
        Frame frame(def.name);
        for (std::size_t i = 0; i < args.size(); ++i) frame.set(def.params[i], std::move(args[i]));
        try {
            exec_block(def.body, frame, depth + 1);
        } catch (ReturnSignal& r) {
            return std::move(r.value);
        }
        return Value::none();
    }

    Value eval(const Expr& e, Frame& env, int depth) {
        if (const auto* lit = e.get<Expr::IntLit>()) return Value::of_int(lit->value);
        if (const auto* lit = e.get<Expr::StrLit>()) return Value::of_str(lit->value);
        if (const auto* lit = e.get<Expr::BoolLit>()) return Value::of_bool(lit->value);
        if (e.get<Expr::NoneLit>()) return Value::none();
        if (const auto* lit = e.get<Expr::ListLit>()) {
            ValueList elems;
            elems.reserve(lit->elems.size());
            for (const ExprPtr& el : lit->elems) elems.push_back(eval(*el, env, depth));
            return Value::of_list(std::move(elems));
        }
        if (const auto* var = e.get<Expr::Var>()) return read_var(var->name, env);
        if (const auto* un = e.get<Expr::Unary>()) {
            return apply_unary(un->op, eval(*un->operand, env, depth));
        }
        if (const auto* bin = e.get<Expr::Binary>()) {
            Value lhs = eval(*bin->lhs, env, depth);
            Value rhs = eval(*bin->rhs, env, depth);
            return apply_binary(bin->op, lhs, rhs);
        }
        if (const auto* cmp = e.get<Expr::Compare>()) {
            Value lhs = eval(*cmp->lhs, env, depth);
            Value rhs = eval(*cmp->rhs, env, depth);
            return apply_compare(cmp->op, lhs, rhs);
        }
        if (const auto* logic = e.get<Expr::Logic>()) {
            Value lhs = eval(*logic->lhs, env, depth);
            if (logic->op == LogicOp::and_op) {
                if (!truthy(lhs)) return lhs;
            } else {
                if (truthy(lhs)) return lhs;
            }
            return eval(*logic->rhs, env, depth);
        }
        if (const auto* idx = e.get<Expr::Index>()) {
            Value base = eval(*idx->base, env, depth);
            Value index = eval(*idx->index, env, depth);
            return index_value(base, index);
        }
        const auto* call = e.get<Expr::Call>();
        Value callee = eval(*call->callee, env, depth);
        std::vector<Value> args;
        args.reserve(call->args.size());
        for (const ExprPtr& a : call->args) args.push_back(eval(*a, env, depth));
        if (!callee.is_callable()) {
            throw FaultSignal{
                Fault{"TypeError", "'" + type_name(callee) + "' object is not callable"}};
        }
        const std::string& name = callee.as_callable().name;
        if (auto it = registry_.find(name); it != registry_.end()) {
            return call_user(*it->second, std::move(args), depth);
        }
        if (name == "len") return builtin_len(args);
        if (name == "range") return builtin_range(args, limits_);
        throw FaultSignal{Fault{"NameError", "name '" + name + "' is not defined"}};
    }
};

}  // namespace

Trace trace(const Program& prog, const std::string& fn_name, const std::vector<Value>& inputs,
            const Limits& limits) {
    if (!prog.functions.contains(fn_name)) throw UnknownFunction(fn_name);
    TraceEngine engine(prog, limits);
    return engine.run(fn_name, inputs);
}

}  // namespace scratchpad::pysub
