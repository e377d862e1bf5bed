#include "function.hpp"

#include <optional>
#include <utility>

namespace abcalc {

struct Function::Impl {
    std::optional<expr::FunctionExpr> expression;
    Callable callable;
    std::string label;
};

Function::Function() : Function(expr::FunctionExpr{}) {}

Function::Function(expr::FunctionExpr e) {
    auto impl = std::make_shared<Impl>();
    impl->label = e.to_string();
    impl->expression = std::move(e);
    impl_ = std::move(impl);
}

Function::Function(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Function Function::from_callable(Callable fn, std::string label) {
    if (!fn) throw Error(ErrorCode::InvalidArgument, "Function: empty callable");
    auto impl = std::make_shared<Impl>();
    impl->callable = std::move(fn);
    impl->label = std::move(label);
    return Function(std::shared_ptr<const Impl>(std::move(impl)));
}

Complex Function::operator()(Complex z) const {
    if (impl_->expression) return impl_->expression->eval(z);
    return impl_->callable(z);
}

Complex Function::eval_near(Complex anchor, Complex z, Complex offset) const {
    if (impl_->expression) return impl_->expression->eval_near(anchor, z, offset);
    return impl_->callable(z);
}

const expr::FunctionExpr* Function::expr() const {
    return impl_->expression ? &*impl_->expression : nullptr;
}

Function Function::derivative() const {
    if (!impl_->expression) {
        throw Error(ErrorCode::DomainNotSupported,
                    "derivative of '" + impl_->label + "' is unavailable: only expressions differentiate");
    }
    return Function(impl_->expression->derivative());
}

const std::string& Function::label() const { return impl_->label; }

}  // namespace abcalc
