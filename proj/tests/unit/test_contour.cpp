#include <doctest.h>

#include "contour.hpp"
#include "expr.hpp"
#include "quadrature.hpp"
#include "specfn.hpp"

using namespace abcalc;

TEST_CASE("tanh-sinh handles endpoint singularities") {
    // ∫_0^1 x^{-1/2} dx = 2, the complement argument keeps 1 - x exact
    const QuadratureResult r = quad::tanh_sinh([](double x, double) { return Complex{1.0 / std::sqrt(x), 0.0}; }, 1e-12);
    CHECK(std::abs(r.value - 2.0) <= 1e-10);
    const QuadratureResult s =
        quad::tanh_sinh([](double, double xc) { return Complex{std::pow(xc, -0.75), 0.0}; }, 1e-10);
    CHECK(std::abs(s.value - 4.0) <= 1e-8);
}

TEST_CASE("Gauss-Kronrod on smooth and oscillatory integrands") {
    const QuadratureResult r = quad::gauss_kronrod([](double t) { return Complex{std::sin(t), std::cos(t)}; }, 0.0, kPi, 1e-13);
    CHECK(std::abs(r.value - Complex{2.0, 0.0}) <= 1e-12);
    CHECK(r.abs_err_estimate <= 1e-10);
    const QuadratureResult w = quad::gauss_kronrod([](double t) { return Complex{std::cos(40.0 * t), 0.0}; }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(w.value.real() - std::sin(40.0) / 40.0) <= 1e-12);
}

TEST_CASE("segment integrals") {
    const Complex a{0.0, 0.0};
    const Complex b{1.0, 1.0};
    const QuadratureResult r = segment_integrate([](Complex w) { return std::exp(w); }, a, b, 1e-13);
    CHECK(std::abs(r.value - (std::exp(b) - std::exp(a))) <= 1e-12);

    // ∫_c^z (z-w)^{s-1} dw = (z-c)^s / s; the weight is part of the substitution
    const Complex c{0.2, -0.1};
    const Complex z{1.0, 0.4};
    for (Complex s : {Complex{0.5, 0.0}, Complex{0.3, 0.7}, Complex{0.05, 0.0}, Complex{2.5, -1.0}}) {
        CAPTURE(s);
        const QuadratureResult q = singular_segment_integrate([](const SegmentPoint&) { return Complex{1.0, 0.0}; }, c, z, s, 1e-12);
        const Complex want = std::exp(s * std::log(z - c)) / s;
        CHECK(std::abs(q.value - want) <= 1e-10 * std::abs(want));
    }
    CHECK_THROWS_AS(singular_segment_integrate([](const SegmentPoint&) { return Complex{}; }, c, z, -0.5, 1e-10), Error);
    CHECK(singular_segment_integrate(Function(expr::parse("z")), c, c, 0.5, 1e-10).value == Complex{});
}

TEST_CASE("singular segment copes with a singular integrand at the basepoint") {
    // ∫_c^z (z-w)^{-1/2} (w-c)^{-1/2} dw = B(1/2, 1/2) = π
    const Complex c{0.5, 0.25};
    const Function f(expr::power_function(c, -0.5));
    const QuadratureResult q = singular_segment_integrate(f, c, c + 2.0, 0.5, 1e-12);
    CHECK(std::abs(q.value - kPi) <= 1e-10);
}

TEST_CASE("contour spec validation") {
    CHECK_THROWS_AS((ContourSpec{1.0, 1.0, 0.1}.validate()), Error);
    CHECK_THROWS_AS((ContourSpec{0.0, 1.0, 1.0}.validate()), Error);
    CHECK_THROWS_AS((ContourSpec{0.0, 1.0, 0.0}.validate()), Error);
    CHECK_NOTHROW((ContourSpec{0.0, 1.0, 0.1}.validate()));
}

TEST_CASE("Hankel contour collapses onto the segment") {
    // ∫_H (w-z)^{s-1} dw = (e^{iπs} - e^{-iπs}) (z-c)^s / s for the paths
    // arriving below and leaving above the cut
    const ContourSpec spec{Complex{0.0, 0.0}, Complex{1.0, 0.5}, 0.1};
    for (Complex s : {Complex{0.5, 0.0}, Complex{-0.4, 0.3}, Complex{1.7, -0.2}}) {
        CAPTURE(s);
        const HankelResult h = hankel_integrate([&](const HankelPoint& p) { return std::exp((s - 1.0) * p.log_w_minus_z); },
                                                spec, 1e-12);
        const Complex want = 2.0 * kI * specfn::sin_pi(s) * std::exp(s * std::log(spec.z - spec.c)) / s;
        CHECK(std::abs(h.value - want) <= 1e-9 * std::abs(want));
    }
    // an integer power closes the contour: Cauchy's formula picks the residue at z
    const HankelResult cauchy =
        hankel_integrate([&](const HankelPoint& p) { return std::exp(p.w) / (p.w - spec.z); }, spec, 1e-12);
    CHECK(std::abs(cauchy.value - kTwoPiI * std::exp(spec.z)) <= 1e-10);
}
