#pragma once

#include <functional>
#include <memory>
#include <string>

#include "expr.hpp"

namespace abcalc {

/// Value-semantic analytic function: either a parsed expression (with an exact
/// symbolic derivative) or an opaque callable such as an operator image.
class Function {
public:
    using Callable = std::function<Complex(Complex)>;

    Function();  // the zero function
    Function(expr::FunctionExpr e);  // NOLINT(google-explicit-constructor)

    static Function from_callable(Callable fn, std::string label);

    Complex operator()(Complex z) const;

    /// Value at z = anchor + offset; expressions use the exact offset for (z - anchor).
    Complex eval_near(Complex anchor, Complex z, Complex offset) const;

    /// Expression form, or nullptr for callables.
    const expr::FunctionExpr* expr() const;

    /// Symbolic derivative. Throws DomainNotSupported for callables: there is
    /// deliberately no numerical fallback.
    Function derivative() const;

    const std::string& label() const;

private:
    struct Impl;
    explicit Function(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace abcalc
