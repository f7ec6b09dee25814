#include "scratchpad/errors.hpp"
#include "scratchpad/pysub_frontend.hpp"

#include <utility>

namespace scratchpad::pysub {

namespace {

std::string describe(const Token& t) {
    switch (t.kind) {
        case TokKind::ident: return "identifier '" + t.text + "'";
        case TokKind::int_lit: return "integer literal";
        case TokKind::str_lit: return "string literal";
        case TokKind::op: return "'" + t.text + "'";
        case TokKind::keyword: return "'" + t.text + "'";
        case TokKind::newline: return "end of line";
        case TokKind::indent: return "indent";
        case TokKind::dedent: return "dedent";
        case TokKind::eof: return "end of input";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::vector<StmtPtr> parse_module() {
        std::vector<StmtPtr> body;
        while (!at(TokKind::eof)) {
            body.push_back(parse_stmt());
        }
        return body;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int function_depth_ = 0;

    const Token& cur() const { return toks_[pos_]; }

    bool at(TokKind kind) const { return cur().kind == kind; }
    bool at_op(std::string_view text) const { return at(TokKind::op) && cur().text == text; }
    bool at_keyword(std::string_view text) const {
        return at(TokKind::keyword) && cur().text == text;
    }

    Token advance() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(cur().line, "expected " + expected + ", found " + describe(cur()));
    }

    Token expect(TokKind kind, const std::string& what) {
        if (!at(kind)) fail(what);
        return advance();
    }

    void expect_op(std::string_view text) {
        if (!at_op(text)) fail("'" + std::string(text) + "'");
        advance();
    }

    void expect_keyword(std::string_view text) {
        if (!at_keyword(text)) fail("'" + std::string(text) + "'");
        advance();
    }

    void expect_newline() {
        if (!at(TokKind::newline)) fail("end of line");
        advance();
    }

    // --- statements ---

    StmtPtr parse_stmt() {
        if (at_keyword("def")) return parse_funcdef();
        if (at_keyword("if")) return parse_if();
        if (at_keyword("while")) return parse_while();
        if (at_keyword("for")) return parse_for();
        if (at_keyword("return")) return parse_return();
        if (at_keyword("pass")) return parse_pass();
        if (at(TokKind::indent)) fail("a statement at the enclosing indentation");
        return parse_simple();
    }

    std::vector<StmtPtr> parse_suite() {
        expect_op(":");
        expect_newline();
        if (!at(TokKind::indent)) fail("an indented block");
        advance();
        std::vector<StmtPtr> body;
        while (!at(TokKind::dedent) && !at(TokKind::eof)) {
            body.push_back(parse_stmt());
        }
        if (at(TokKind::dedent)) advance();
        return body;
    }

    StmtPtr parse_funcdef() {
        const int line = cur().line;
        advance();  // def
        Stmt::FuncDef def;
        def.name = expect(TokKind::ident, "function name").text;
        expect_op("(");
        if (!at_op(")")) {
            while (true) {
                def.params.push_back(expect(TokKind::ident, "parameter name").text);
                if (at_op(",")) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect_op(")");
        ++function_depth_;
        def.body = parse_suite();
        --function_depth_;
        auto stmt = std::make_unique<Stmt>();
        stmt->node = std::move(def);
        stmt->line = line;
        return stmt;
    }

    StmtPtr parse_if() {
        const int line = cur().line;
        Stmt::If node;
        while (true) {
            Stmt::IfArm arm;
            arm.line = cur().line;
            advance();  // if / elif
            arm.cond = parse_expr();
            arm.body = parse_suite();
            node.arms.push_back(std::move(arm));
            if (at_keyword("elif")) continue;
            break;
        }
        if (at_keyword("else")) {
            node.else_line = cur().line;
            advance();
            node.else_body = parse_suite();
        }
        auto stmt = std::make_unique<Stmt>();
        stmt->node = std::move(node);
        stmt->line = line;
        return stmt;
    }

    StmtPtr parse_while() {
        const int line = cur().line;
        advance();
        Stmt::While node;
        node.cond = parse_expr();
        node.body = parse_suite();
        auto stmt = std::make_unique<Stmt>();
        stmt->node = std::move(node);
        stmt->line = line;
        return stmt;
    }

    StmtPtr parse_for() {
        const int line = cur().line;
        advance();
        Stmt::ForRange node;
        node.var = expect(TokKind::ident, "loop variable").text;
        expect_keyword("in");
        node.iterable = parse_expr();
        node.body = parse_suite();
        auto stmt = std::make_unique<Stmt>();
        stmt->node = std::move(node);
        stmt->line = line;
        return stmt;
    }

    StmtPtr parse_return() {
        const int line = cur().line;
        if (function_depth_ == 0) throw ParseError(line, "'return' outside function");
        advance();
        Stmt::Return node;
        if (!at(TokKind::newline)) node.value = parse_expr();
        expect_newline();
        auto stmt = std::make_unique<Stmt>();
        stmt->node = std::move(node);
        stmt->line = line;
        return stmt;
    }

    StmtPtr parse_pass() {
        const int line = cur().line;
        advance();
        expect_newline();
        auto stmt = std::make_unique<Stmt>();
        stmt->node = Stmt::Pass{};
        stmt->line = line;
        return stmt;
    }

    void check_assign_target(const Expr& target) const {
        if (target.get<Expr::Var>()) return;
        if (const auto* idx = target.get<Expr::Index>()) {
            check_assign_target(*idx->base);
            return;
        }
        throw ParseError(target.line, "cannot assign to this expression");
    }

    StmtPtr parse_simple() {
        const int line = cur().line;
        ExprPtr first = parse_expr();
        auto stmt = std::make_unique<Stmt>();
        stmt->line = line;
        if (at_op("=")) {
            advance();
            check_assign_target(*first);
            Stmt::Assign node;
            node.target = std::move(first);
            node.value = parse_expr();
            stmt->node = std::move(node);
        } else if (at_op("+=") || at_op("-=") || at_op("*=") || at_op("//=") || at_op("%=")) {
            const std::string op = advance().text;
            check_assign_target(*first);
            Stmt::AugAssign node;
            node.target = std::move(first);
            node.op = op == "+=" ? BinaryOp::add
                    : op == "-=" ? BinaryOp::sub
                    : op == "*=" ? BinaryOp::mul
                    : op == "//=" ? BinaryOp::floordiv
                                  : BinaryOp::mod;
            node.value = parse_expr();
            stmt->node = std::move(node);
        } else {
            Stmt::ExprStmt node;
            node.expr = std::move(first);
            stmt->node = std::move(node);
        }
        expect_newline();
        return stmt;
    }

    // --- expressions (Python precedence) ---

    ExprPtr make_expr(int line, auto node) {
        auto e = std::make_unique<Expr>();
        e->node = std::move(node);
        e->line = line;
        return e;
    }

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (at_keyword("or")) {
            const int line = cur().line;
            advance();
            ExprPtr rhs = parse_and();
            lhs = make_expr(line, Expr::Logic{LogicOp::or_op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_not();
        while (at_keyword("and")) {
            const int line = cur().line;
            advance();
            ExprPtr rhs = parse_not();
            lhs = make_expr(line, Expr::Logic{LogicOp::and_op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_not() {
        if (at_keyword("not")) {
            const int line = cur().line;
            advance();
            return make_expr(line, Expr::Unary{UnaryOp::logical_not, parse_not()});
        }
        return parse_comparison();
    }

    ExprPtr parse_comparison() {
        ExprPtr lhs = parse_arith();
        static constexpr std::pair<std::string_view, CompareOp> table[] = {
            {"<=", CompareOp::le}, {">=", CompareOp::ge}, {"==", CompareOp::eq},
            {"!=", CompareOp::ne}, {"<", CompareOp::lt},  {">", CompareOp::gt}};
        for (const auto& [text, op] : table) {
            if (at_op(text)) {
                const int line = cur().line;
                advance();
                ExprPtr rhs = parse_arith();
                return make_expr(line, Expr::Compare{op, std::move(lhs), std::move(rhs)});
            }
        }
        return lhs;
    }

    ExprPtr parse_arith() {
        ExprPtr lhs = parse_term();
        while (at_op("+") || at_op("-")) {
            const int line = cur().line;
            const BinaryOp op = cur().text == "+" ? BinaryOp::add : BinaryOp::sub;
            advance();
            ExprPtr rhs = parse_term();
            lhs = make_expr(line, Expr::Binary{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (at_op("*") || at_op("//") || at_op("%")) {
            const int line = cur().line;
            const BinaryOp op = cur().text == "*" ? BinaryOp::mul
                              : cur().text == "//" ? BinaryOp::floordiv
                                                   : BinaryOp::mod;
            advance();
            ExprPtr rhs = parse_factor();
            lhs = make_expr(line, Expr::Binary{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        if (at_op("-")) {
            const int line = cur().line;
            advance();
            return make_expr(line, Expr::Unary{UnaryOp::neg, parse_factor()});
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_postfix();
        if (at_op("**")) {
            const int line = cur().line;
            advance();
            ExprPtr exponent = parse_factor();  // right associative, unary allowed on the right
            return make_expr(line, Expr::Binary{BinaryOp::pow, std::move(base), std::move(exponent)});
        }
        return base;
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_atom();
        while (true) {
            if (at_op("[")) {
                const int line = cur().line;
                advance();
                ExprPtr index = parse_expr();
                expect_op("]");
                e = make_expr(line, Expr::Index{std::move(e), std::move(index)});
                continue;
            }
            if (at_op("(")) {
                const int line = cur().line;
                advance();
                Expr::Call call;
                call.callee = std::move(e);
                if (!at_op(")")) {
                    while (true) {
                        call.args.push_back(parse_expr());
                        if (at_op(",")) {
                            advance();
                            continue;
                        }
                        break;
                    }
                }
                expect_op(")");
                e = make_expr(line, std::move(call));
                continue;
            }
            return e;
        }
    }

    ExprPtr parse_atom() {
        const int line = cur().line;
        if (at(TokKind::int_lit)) {
            return make_expr(line, Expr::IntLit{BigInt(advance().text)});
        }
        if (at(TokKind::str_lit)) {
            return make_expr(line, Expr::StrLit{advance().text});
        }
        if (at_keyword("True")) {
            advance();
            return make_expr(line, Expr::BoolLit{true});
        }
        if (at_keyword("False")) {
            advance();
            return make_expr(line, Expr::BoolLit{false});
        }
        if (at_keyword("None")) {
            advance();
            return make_expr(line, Expr::NoneLit{});
        }
        if (at(TokKind::ident)) {
            return make_expr(line, Expr::Var{advance().text});
        }
        if (at_op("(")) {
            advance();
            ExprPtr inner = parse_expr();
            expect_op(")");
            return inner;
        }
        if (at_op("[")) {
            advance();
            Expr::ListLit list;
            if (!at_op("]")) {
                while (true) {
                    list.elems.push_back(parse_expr());
                    if (at_op(",")) {
                        advance();
                        continue;
                    }
                    break;
                }
            }
            expect_op("]");
            return make_expr(line, std::move(list));
        }
        fail("an expression");
    }
};

}  // namespace

Program parse(std::vector<Token> tokens, std::vector<std::string> source_lines) {
    Parser parser(std::move(tokens));
    Program prog;
    prog.body = parser.parse_module();
    prog.source_lines = std::move(source_lines);
    for (const StmtPtr& stmt : prog.body) {
        if (const auto* def = stmt->get<Stmt::FuncDef>()) {
            prog.functions[def->name] = def;
        }
    }
    return prog;
}

Program parse_program(std::string_view source) {
    return parse(tokenize(source), split_source_lines(source));
}

}  // namespace scratchpad::pysub
