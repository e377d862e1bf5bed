#pragma once

#include "contour.hpp"
#include "function.hpp"
#include "order.hpp"

namespace abcalc {

struct RLRequest {
    Function f;
    Complex c{};
    Complex z{1.0, 0.0};
    Order nu;
    double tol = 1e-10;
    double epsilon = 0.1;  // contour radius for rl_cauchy
};

/// (1/Γ(ν)) ∫_c^z (z-w)^{ν-1} f(w) dw. Requires Re(ν) > 0; c == z gives 0.
EvalResult rl_integral(const RLRequest& req);

/// Σ_{k<n} f^{(k)}(c)(z-c)^{k-ν}/Γ(k-ν+1) + I^{n-ν} f^{(n)}, n = ⌊Re ν⌋+1, with
/// symbolic derivatives. Requires Re(ν) >= 0 and an expression f.
EvalResult rl_derivative(const RLRequest& req);

/// Γ(ν+1)/(2πi) ∫_H (w-z)^{-ν-1} f(w) dw with ν in the derivative convention
/// (an integral of order α is ν = -α). Throws OrderIsNegativeInteger.
EvalResult rl_cauchy(const RLRequest& req);

/// a^{-ν} e^{az}: the integral of order ν of e^{az} from c = -∞.
Complex rl_infinite_basepoint_exp(Complex a, Complex nu, Complex z);

}  // namespace abcalc
