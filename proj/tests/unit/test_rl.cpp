#include <doctest.h>

#include "expr.hpp"
#include "rl.hpp"
#include "specfn.hpp"

using namespace abcalc;

namespace {
double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("RL integral of a power") {
    const Complex c{0.3, -0.2};
    const Complex z{1.4, 0.6};
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (Complex nu : {Complex{0.5, 0.0}, Complex{1.3, 0.4}, Complex{0.2, -0.6}}) {
            const Function f(expr::power_function(c, alpha));
            const EvalResult r = rl_integral({f, c, z, Order(nu), 1e-11, 0.1});
            const Complex want = specfn::complex_gamma(alpha + 1.0) * specfn::reciprocal_gamma(alpha + nu + 1.0) *
                                 std::exp((alpha + nu) * std::log(z - c));
            CAPTURE(alpha);
            CAPTURE(nu);
            CHECK(rel(r.value, want) <= 1e-9);
            CHECK(r.formulation == "kernel");
        }
    }
    CHECK(rl_integral({Function(expr::parse("z")), 0.5, 0.5, Order(0.5), 1e-10, 0.1}).value == Complex{});
    CHECK(code_of([] { rl_integral({Function(expr::parse("z")), 0.0, 1.0, Order(-0.5), 1e-10, 0.1}); }) ==
          ErrorCode::DomainError);
}

TEST_CASE("RL derivative") {
    const Function f(expr::parse("pow(z-0,2) + exp(z)"));
    CHECK(rl_derivative({f, 0.0, 1.3, Order(0.0), 1e-10, 0.1}).value == f(1.3));
    CHECK(std::abs(rl_derivative({f, 0.0, 1.3, Order(1.0), 1e-10, 0.1}).value - (2.6 + std::exp(1.3))) <= 1e-13);
    CHECK(std::abs(rl_derivative({f, 0.0, 1.3, Order(2.0), 1e-10, 0.1}).value - (2.0 + std::exp(1.3))) <= 1e-13);
    // D^{1/2} z = z^{1/2} / Γ(3/2)
    const EvalResult half = rl_derivative({Function(expr::parse("z")), 0.0, 2.0, Order(0.5), 1e-11, 0.1});
    CHECK(rel(half.value, std::sqrt(2.0) / std::tgamma(1.5)) <= 1e-10);
    CHECK(code_of([&] { rl_derivative({f, 0.0, 1.0, Order(-0.5), 1e-10, 0.1}); }) == ErrorCode::DomainError);
}

TEST_CASE("Cauchy contour form agrees with the real-kernel forms") {
    const Function f(expr::parse("exp(z) + sin(2*z)"));
    const Complex z{0.9, 0.35};
    for (Complex nu : {Complex{0.5, 0.0}, Complex{1.4, -0.3}, Complex{0.25, 0.6}}) {
        CAPTURE(nu);
        const EvalResult integral = rl_integral({f, 0.0, z, Order(nu), 1e-11, 0.1});
        const EvalResult contour = rl_cauchy({f, 0.0, z, Order(-nu), 1e-11, 0.1});
        CHECK(rel(contour.value, integral.value) <= 1e-9);
        CHECK(contour.formulation == "hankel");
        const EvalResult deriv = rl_derivative({f, 0.0, z, Order(nu), 1e-11, 0.1});
        const EvalResult dcontour = rl_cauchy({f, 0.0, z, Order(nu), 1e-11, 0.1});
        CHECK(rel(dcontour.value, deriv.value) <= 1e-8);
    }
    CHECK(code_of([&] { rl_cauchy({f, 0.0, z, Order(-2.0), 1e-10, 0.1}); }) == ErrorCode::OrderIsNegativeInteger);
}

TEST_CASE("infinite basepoint exponential") {
    const Complex a{2.0, 1.0};
    const Complex z{0.3, -0.2};
    const Complex nu{0.4, 0.3};
    CHECK(std::abs(rl_infinite_basepoint_exp(a, nu, z) - std::exp(-nu * std::log(a)) * std::exp(a * z)) <= 1e-14);
    CHECK(code_of([&] { rl_infinite_basepoint_exp(0.0, nu, z); }) == ErrorCode::ZeroRate);
}
