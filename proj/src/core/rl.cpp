#include "rl.hpp"

#include <cmath>

#include "specfn.hpp"

namespace abcalc {

EvalResult rl_integral(const RLRequest& req) {
    const Complex nu = req.nu.value();
    if (!(nu.real() > 0.0)) throw Error(ErrorCode::DomainError, "rl_integral: requires Re(nu) > 0");
    EvalResult r;
    r.formulation = "kernel";
    if (req.c == req.z) return r;
    const QuadratureResult q = singular_segment_integrate(req.f, req.c, req.z, nu, req.tol);
    const Complex rg = specfn::reciprocal_gamma(nu);
    r.value = q.value * rg;
    r.abs_err_estimate = q.abs_err_estimate * std::abs(rg);
    r.nodes_used = q.nodes_used;
    return r;
}

EvalResult rl_derivative(const RLRequest& req) {
    const Order& nu = req.nu;
    if (!(nu.re() >= 0.0)) throw Error(ErrorCode::DomainError, "rl_derivative: requires Re(nu) >= 0");
    EvalResult r;
    r.formulation = "expansion";
    if (nu.is_zero()) {
        r.value = req.f(req.z);
        return r;
    }
    long k_int = 0;
    if (nu.near_integer(&k_int, 0.0)) {
        Function d = req.f;
        for (long k = 0; k < k_int; ++k) d = d.derivative();
        r.value = d(req.z);
        return r;
    }
    const int n = static_cast<int>(std::floor(nu.re())) + 1;
    const Complex d = req.z - req.c;
    const Complex log_d = std::log(d);
    Function fk = req.f;
    Complex boundary{};
    for (int k = 0; k < n; ++k) {
        const Complex at_c = fk(req.c);
        if (at_c != Complex{}) {
            const Complex e = static_cast<double>(k) - nu.value();
            boundary += at_c * std::exp(e * log_d) * specfn::reciprocal_gamma(e + 1.0);
        }
        fk = fk.derivative();
    }
    RLRequest inner = req;
    inner.f = fk;
    inner.nu = Order(static_cast<double>(n) - nu.value());
    const EvalResult tail = rl_integral(inner);
    r.value = boundary + tail.value;
    r.abs_err_estimate = tail.abs_err_estimate;
    r.nodes_used = tail.nodes_used;
    return r;
}

EvalResult rl_cauchy(const RLRequest& req) {
    const Complex nu = req.nu.value();
    if (req.nu.is_negative_integer()) {
        throw Error(ErrorCode::OrderIsNegativeInteger, "rl_cauchy: derivative order is a negative integer");
    }
    const Complex s = -nu - 1.0;
    const Function& f = req.f;
    const HankelIntegrand g = [&](const HankelPoint& p) { return std::exp(s * p.log_w_minus_z) * f(p.w); };
    const HankelResult h = hankel_integrate(g, {req.c, req.z, req.epsilon}, req.tol);
    const Complex pre = specfn::complex_gamma(nu + 1.0) / kTwoPiI;
    EvalResult r;
    r.formulation = "hankel";
    r.value = pre * h.value;
    r.abs_err_estimate = std::abs(pre) * h.abs_err_estimate;
    r.nodes_used = h.nodes_used;
    r.eps_sensitivity = std::abs(pre) * h.eps_sensitivity;
    return r;
}

Complex rl_infinite_basepoint_exp(Complex a, Complex nu, Complex z) {
    if (a == Complex{}) throw Error(ErrorCode::ZeroRate, "rl_infinite_basepoint_exp: rate a must be nonzero");
    return std::exp(-nu * std::log(a) + a * z);
}

}  // namespace abcalc
