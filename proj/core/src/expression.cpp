#include "tcontract/expression.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>

namespace tcontract {

class Expression::Parser {
  public:
    Parser(std::string_view text, int line, int column) : text_(text), line_(line), column_(column) {}

    std::vector<Instr> run() {
        expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return std::move(code_);
    }

  private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ConfigError(message + " in expression '" + std::string(text_) + "'", line_,
                          column_ + static_cast<int>(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expr() {
        term();
        for (;;) {
            if (accept('+')) { term(); binary(Op::Add); }
            else if (accept('-')) { term(); binary(Op::Sub); }
            else return;
        }
    }

    void term() {
        unary();
        for (;;) {
            if (accept('*')) { unary(); binary(Op::Mul); }
            else if (accept('/')) { unary(); binary(Op::Div); }
            else return;
        }
    }

    void unary() {
        if (accept('-')) { unary(); negate(); return; }
        if (accept('+')) { unary(); return; }
        power();
    }

    void power() {
        primary();
        if (accept('^')) {
            unary();
            binary(Op::Pow);
        }
    }

    void primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (accept('(')) {
            expr();
            if (!accept(')')) fail("expected ')'");
            return;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    void number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                digits();
            }
        }
        const std::string literal(text_.substr(start, pos_ - start));
        if (literal == ".") fail("malformed number");
        code_.push_back({Op::Const, std::stold(literal), 0});
    }

    void identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return code_.push_back({Op::Var, 0, 0});
        if (name == "e") return code_.push_back({Op::Const, std::numbers::e_v<Real>, 0});
        if (name == "pi") return code_.push_back({Op::Const, std::numbers::pi_v<Real>, 0});

        Op op;
        if (name == "sqrt") op = Op::Sqrt;
        else if (name == "ln" || name == "log") op = Op::Ln;
        else if (name == "exp") op = Op::Exp;
        else if (name == "abs") op = Op::Abs;
        else {
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        if (!accept('(')) fail("expected '(' after " + std::string(name));
        expr();
        if (!accept(')')) fail("expected ')'");
        apply_function(op);
    }

    bool top_is_const(std::size_t depth = 0) const {
        return code_.size() > depth && code_[code_.size() - 1 - depth].op == Op::Const;
    }

    void negate() {
        if (top_is_const()) {
            code_.back().value = -code_.back().value;
            return;
        }
        code_.push_back({Op::Neg, 0, 0});
    }

    void apply_function(Op op) {
        if (top_is_const()) {
            Real& v = code_.back().value;
            v = evaluate_function(op, v);
            return;
        }
        code_.push_back({op, 0, 0});
    }

    void binary(Op op) {
        // Fold when both operands are single constants.
        if (top_is_const(0) && top_is_const(1)) {
            const Real rhs = code_.back().value;
            code_.pop_back();
            Real& lhs = code_.back().value;
            lhs = evaluate_binary(op, lhs, rhs);
            return;
        }
        if (op == Op::Pow && top_is_const()) {
            const Real exponent = code_.back().value;
            if (std::floor(exponent) == exponent && std::fabs(exponent) <= 64) {
                code_.back() = {Op::PowInt, 0, static_cast<int>(exponent)};
                return;
            }
        }
        code_.push_back({op, 0, 0});
    }

    std::string_view text_;
    int line_;
    int column_;
    std::size_t pos_ = 0;
    std::vector<Instr> code_;

  public:
    static Real evaluate_function(Op op, Real v) {
        switch (op) {
            case Op::Sqrt: return std::sqrt(v);
            case Op::Ln: return std::log(v);
            case Op::Exp: return std::exp(v);
            case Op::Abs: return std::fabs(v);
            default: return v;
        }
    }

    static Real evaluate_binary(Op op, Real a, Real b) {
        switch (op) {
            case Op::Add: return a + b;
            case Op::Sub: return a - b;
            case Op::Mul: return a * b;
            case Op::Div: return a / b;
            case Op::Pow: return std::pow(a, b);
            default: return a;
        }
    }

    static Real int_power(Real base, int exponent) {
        const bool invert = exponent < 0;
        unsigned e = static_cast<unsigned>(invert ? -exponent : exponent);
        Real result = 1;
        while (e) {
            if (e & 1u) result *= base;
            base *= base;
            e >>= 1u;
        }
        return invert ? 1 / result : result;
    }
};

Expression Expression::parse(std::string_view text, int line, int column) {
    Expression e;
    e.text_ = std::string(text);
    e.code_ = Parser(text, line, column).run();
    int depth = 0;
    for (const auto& instr : e.code_) {
        switch (instr.op) {
            case Op::Const:
            case Op::Var: ++depth; break;
            case Op::Add:
            case Op::Sub:
            case Op::Mul:
            case Op::Div:
            case Op::Pow: --depth; break;
            default: break;
        }
        e.max_depth_ = std::max(e.max_depth_, depth);
    }
    return e;
}

Real Expression::operator()(Real x) const {
    std::array<Real, 64> fixed{};
    std::vector<Real> heap;
    Real* stack = fixed.data();
    if (max_depth_ > static_cast<int>(fixed.size())) {
        heap.resize(static_cast<std::size_t>(max_depth_));
        stack = heap.data();
    }
    int top = -1;
    for (const auto& instr : code_) {
        switch (instr.op) {
            case Op::Const: stack[++top] = instr.value; break;
            case Op::Var: stack[++top] = x; break;
            case Op::Neg: stack[top] = -stack[top]; break;
            case Op::PowInt: stack[top] = Parser::int_power(stack[top], instr.exponent); break;
            case Op::Sqrt:
            case Op::Ln:
            case Op::Exp:
            case Op::Abs: stack[top] = Parser::evaluate_function(instr.op, stack[top]); break;
            default:
                --top;
                stack[top] = Parser::evaluate_binary(instr.op, stack[top], stack[top + 1]);
        }
    }
    return stack[0];
}

bool Expression::is_constant() const noexcept {
    return code_.size() == 1 && code_.front().op == Op::Const;
}

bool Expression::uses_variable() const noexcept {
    for (const auto& instr : code_)
        if (instr.op == Op::Var) return true;
    return false;
}

Real parse_constant(std::string_view text, int line, int column) {
    const auto e = Expression::parse(text, line, column);
    if (e.uses_variable())
        throw ConfigError("expected a constant, got an expression in x: '" + std::string(text) + "'",
                          line, column);
    return e(0);
}

}  // namespace tcontract
