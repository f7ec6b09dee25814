#pragma once

#include "scratchpad/value.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace scratchpad::pysub {

enum class TokKind { ident, int_lit, str_lit, op, keyword, newline, indent, dedent, eof };

struct Token {
    TokKind kind;
    std::string text;
    int line = 0;  // 1-based
    int col = 0;   // 1-based
};

enum class UnaryOp { neg, logical_not };
enum class BinaryOp { add, sub, mul, floordiv, mod, pow };
enum class CompareOp { lt, gt, le, ge, eq, ne };
enum class LogicOp { and_op, or_op };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    struct IntLit { BigInt value; };
    struct StrLit { std::string value; };
    struct BoolLit { bool value; };
    struct NoneLit {};
    struct ListLit { std::vector<ExprPtr> elems; };
    struct Var { std::string name; };
    struct Unary { UnaryOp op; ExprPtr operand; };
    struct Binary { BinaryOp op; ExprPtr lhs; ExprPtr rhs; };
    struct Compare { CompareOp op; ExprPtr lhs; ExprPtr rhs; };
    struct Logic { LogicOp op; ExprPtr lhs; ExprPtr rhs; };  // short-circuit
    struct Index { ExprPtr base; ExprPtr index; };
    struct Call { ExprPtr callee; std::vector<ExprPtr> args; };

    std::variant<IntLit, StrLit, BoolLit, NoneLit, ListLit, Var, Unary, Binary, Compare, Logic,
                 Index, Call> node;
    int line = 0;

    template <typename T>
    const T* get() const { return std::get_if<T>(&node); }
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
    struct FuncDef {
        std::string name;
        std::vector<std::string> params;
        std::vector<StmtPtr> body;
    };
    struct Assign { ExprPtr target; ExprPtr value; };       // target: Var or Index chain
    struct AugAssign { ExprPtr target; BinaryOp op; ExprPtr value; };
    struct IfArm { ExprPtr cond; std::vector<StmtPtr> body; int line = 0; };
    struct If {
        std::vector<IfArm> arms;          // if + elif arms, each with its own header line
        std::vector<StmtPtr> else_body;   // empty when no else
        int else_line = 0;                // 0 when no else
    };
    struct While { ExprPtr cond; std::vector<StmtPtr> body; };
    struct ForRange { std::string var; ExprPtr iterable; std::vector<StmtPtr> body; };
    struct Return { ExprPtr value; };  // null value means bare `return`
    struct Pass {};
    struct ExprStmt { ExprPtr expr; };

    std::variant<FuncDef, Assign, AugAssign, If, While, ForRange, Return, Pass, ExprStmt> node;
    int line = 0;  // statement id: 1-based source line of the (header) line

    template <typename T>
    const T* get() const { return std::get_if<T>(&node); }
};

struct Program {
    std::vector<StmtPtr> body;
    std::vector<std::string> source_lines;  // verbatim line table, index = line - 1
    std::map<std::string, const Stmt::FuncDef*> functions;  // top-level defs

    const std::string& line_text(int line) const {
        return source_lines.at(static_cast<std::size_t>(line) - 1);
    }
};

}  // namespace scratchpad::pysub
