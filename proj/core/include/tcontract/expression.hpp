#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tcontract/real.hpp"

namespace tcontract {

/// A compiled expression in one real variable `x`.
///
///     expr    ::= term { ("+" | "-") term }
///     term    ::= unary { ("*" | "/") unary }
///     unary   ::= ("-" | "+") unary | power
///     power   ::= primary [ "^" unary ]          (right associative)
///     primary ::= number | "x" | "e" | "pi"
///               | ("sqrt" | "ln" | "log" | "exp" | "abs") "(" expr ")"
///               | "(" expr ")"
///
/// Constant subexpressions are folded; constant integer exponents compile to
/// repeated multiplication.
class Expression {
  public:
    /// Throws ConfigError. `line` and `column` locate the text inside a
    /// surrounding file and are added to reported positions.
    static Expression parse(std::string_view text, int line = 0, int column = 1);

    Real operator()(Real x) const;

    const std::string& text() const noexcept { return text_; }
    bool is_constant() const noexcept;
    bool uses_variable() const noexcept;

  private:
    enum class Op : std::uint8_t {
        Const, Var, Add, Sub, Mul, Div, Pow, PowInt, Neg, Sqrt, Ln, Exp, Abs
    };
    struct Instr {
        Op op;
        Real value = 0;
        int exponent = 0;
    };
    class Parser;

    std::string text_;
    std::vector<Instr> code_;
    int max_depth_ = 0;
};

/// Parses a constant expression such as "2/e" or "1e-10".
Real parse_constant(std::string_view text, int line = 0, int column = 1);

}  // namespace tcontract
