#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "types.hpp"

namespace abcalc::expr {

enum class Kind : std::uint8_t { Const, Var, Add, Sub, Mul, Div, IntPow, Pow, Exp, Sin, Cos };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Kind kind = Kind::Const;
    Complex value{};    // Const: the constant; Pow: the exponent α
    long exponent = 0;  // IntPow
    NodePtr lhs;        // operand / left child
    NodePtr rhs;        // right child of binary nodes
};

/// k · exp(a·z), recognised for the infinite-basepoint closed forms.
struct ExponentialForm {
    Complex coefficient{1.0, 0.0};
    Complex rate{};
};

/// Immutable analytic-function expression in the variable z.
///
/// Non-integer powers use the principal branch, arg ∈ (-π, π]; a base with a
/// signed-zero imaginary part is treated as lying on the upper side of the cut.
class FunctionExpr {
public:
    FunctionExpr();  // the constant 0
    explicit FunctionExpr(NodePtr root);

    static FunctionExpr constant(Complex c);
    static FunctionExpr variable();

    const Node& root() const { return *root_; }
    const NodePtr& root_ptr() const { return root_; }

    /// Throws Error{EvalDomainError} on division by zero or 0 raised to a
    /// power with non-positive real part.
    Complex eval(Complex z) const;
    Complex operator()(Complex z) const { return eval(z); }

    /// eval(z) where z = anchor + offset is known more precisely through offset:
    /// every subtree (z - anchor) evaluates to offset exactly.
    Complex eval_near(Complex anchor, Complex z, Complex offset) const;

    /// Exact symbolic derivative with light constant folding.
    FunctionExpr derivative() const;

    /// Fully parenthesised text accepted back by parse().
    std::string to_string() const;

    std::optional<ExponentialForm> as_exponential() const;

    friend bool operator==(const FunctionExpr& a, const FunctionExpr& b);

    friend FunctionExpr operator+(const FunctionExpr& a, const FunctionExpr& b);
    friend FunctionExpr operator-(const FunctionExpr& a, const FunctionExpr& b);
    friend FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b);
    friend FunctionExpr operator/(const FunctionExpr& a, const FunctionExpr& b);

private:
    NodePtr root_;
};

FunctionExpr int_pow(const FunctionExpr& base, long n);
FunctionExpr pow(const FunctionExpr& base, Complex alpha);
FunctionExpr exp(const FunctionExpr& arg);
FunctionExpr sin(const FunctionExpr& arg);
FunctionExpr cos(const FunctionExpr& arg);

/// (z - c)^α
FunctionExpr power_function(Complex c, Complex alpha);
/// exp(a·z)
FunctionExpr exponential_function(Complex a);

struct ParseError {
    std::size_t position = 0;  // 1-based column; input length + 1 means end of input
    std::string message;
};

std::variant<FunctionExpr, ParseError> try_parse(std::string_view src);

/// Throws Error{ParseError} carrying the position in its message.
FunctionExpr parse(std::string_view src);

/// Shortest round-trip formatting of a complex literal in the grammar's syntax.
std::string format_complex(Complex v);

}  // namespace abcalc::expr
