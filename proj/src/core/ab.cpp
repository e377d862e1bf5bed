#include "ab.hpp"

#include <cmath>
#include <utility>

#include "contour.hpp"
#include "rl.hpp"
#include "series.hpp"
#include "specfn.hpp"

namespace abcalc {

MultiplierFunction MultiplierFunction::constant_one() { return {}; }

MultiplierFunction MultiplierFunction::ab_normalization() {
    MultiplierFunction m;
    m.kind_ = Kind::ab_normalization;
    return m;
}

MultiplierFunction MultiplierFunction::user(std::function<Complex(Complex)> fn) {
    if (!fn) throw Error(ErrorCode::InvalidArgument, "MultiplierFunction: empty callable");
    MultiplierFunction m;
    m.kind_ = Kind::user_table;
    m.fn_ = std::move(fn);
    return m;
}

Complex MultiplierFunction::operator()(Complex nu) const {
    switch (kind_) {
        case Kind::constant_one: return {1.0, 0.0};
        case Kind::ab_normalization: return 1.0 - nu + nu * specfn::reciprocal_gamma(nu);
        case Kind::user_table: return fn_(nu);
    }
    return {1.0, 0.0};
}

Complex MultiplierFunction::checked(Complex nu) const {
    const Complex b = (*this)(nu);
    if (!(std::abs(b) > 1e-12) || !is_finite(b)) {
        throw Error(ErrorCode::MultiplierZero, "multiplier B(nu) vanishes or is not finite at this order");
    }
    return b;
}

const char* to_string(Formulation f) noexcept {
    switch (f) {
        case Formulation::kernel: return "kernel";
        case Formulation::series: return "series";
        case Formulation::hankel: return "hankel";
        case Formulation::automatic: return "auto";
    }
    return "auto";
}

namespace {

constexpr double kOrderOneTol = 1e-12;

// Tolerance handed to the quadrature that feeds a numerical derivative.
constexpr double kKernelQuadTol = 1e-13;

bool is_order_one(const Order& nu) { return std::abs(nu.value() - 1.0) <= kOrderOneTol; }

void require_derivative_domain(const Order& nu) {
    if (nu.is_negative_real()) {
        throw Error(ErrorCode::DomainNotSupported, "AB derivatives are not defined for nu on the negative real axis");
    }
}

Formulation resolve(const ABRequest& req) {
    if (req.formulation != Formulation::automatic) return req.formulation;
    if (req.nu.re() > 0.0) return Formulation::series;
    if (req.nu.contour_admissible()) return Formulation::hankel;
    throw Error(ErrorCode::DomainNotSupported, "no formulation covers this order");
}

void require_formulation_domain(Formulation form, const Order& nu) {
    if (form == Formulation::hankel) {
        if (!nu.contour_admissible()) {
            throw Error(ErrorCode::DomainNotSupported, "hankel formulation requires |Im(nu)| >= 1e-3");
        }
    } else if (!(nu.re() > 0.0)) {
        throw Error(ErrorCode::DomainNotSupported,
                    std::string(to_string(form)) + " formulation requires Re(nu) > 0");
    }
}

void require_converged(const specfn::MLValue& v, const char* who) {
    if (!v.converged) throw Error(ErrorCode::NotConverged, std::string(who) + ": kernel series did not converge");
}

// Σ_{n>=1} xⁿ I^{nν+shift} g(z) added onto `first`.
EvalResult rl_series(const Function& g, const ABRequest& req, Complex x, double shift, Complex first) {
    SeriesAccumulator acc(req.series, first);
    EvalResult r;
    Complex xn{1.0, 0.0};
    for (int n = 1; n < req.series.max_terms; ++n) {
        xn *= x;
        RLRequest rr{g, req.c, req.z, Order(static_cast<double>(n) * req.nu.value() + shift), req.tol, req.epsilon};
        const EvalResult term = rl_integral(rr);
        r.abs_err_estimate += std::abs(xn) * term.abs_err_estimate;
        r.nodes_used += term.nodes_used;
        if (acc.add(xn * term.value)) break;
    }
    if (!acc.done()) throw Error(ErrorCode::NotConverged, "AB series did not converge within max_terms");
    r.value = acc.sum();
    r.terms_used = acc.terms() + 1;
    r.abs_err_estimate += acc.last_term();
    r.formulation = "series";
    return r;
}

// ∫_c^ζ E_ν(x(ζ-y)^ν) g(y) dy
QuadratureResult ml_kernel_integral(const Function& g, Complex c, Complex zeta, const ABRequest& req, Complex x,
                                    double tol, int* max_terms_seen) {
    const Complex nu = req.nu.value();
    const SingularIntegrand k = [&](const SegmentPoint& p) -> Complex {
        const specfn::MLValue e = specfn::mittag_leffler(nu, 1.0, x * std::exp(nu * p.log_z_minus_w), req.series);
        require_converged(e, "ML kernel");
        if (e.terms_used > *max_terms_seen) *max_terms_seen = e.terms_used;
        return e.value * g.eval_near(c, p.w, p.w_minus_c);
    };
    return singular_segment_integrate(k, c, zeta, 1.0, tol);
}

EvalResult scale(EvalResult r, Complex factor) {
    r.value *= factor;
    r.abs_err_estimate *= std::abs(factor);
    r.eps_sensitivity *= std::abs(factor);
    return r;
}

}  // namespace

EvalResult ab_integral(const ABRequest& req) {
    const Complex nu = req.nu.value();
    const Complex b = req.B.checked(nu);
    const Complex fz = req.f(req.z);
    EvalResult r;
    r.formulation = "kernel";
    if (req.nu.is_zero()) {
        r.value = fz / b;
        return r;
    }
    RLRequest rr{req.f, req.c, req.z, req.nu, req.tol, req.epsilon};
    EvalResult rl;
    if (nu.real() > 0.0) {
        rl = rl_integral(rr);
    } else {
        rr.nu = Order(-nu);
        rl = rl_cauchy(rr);
    }
    r.value = ((1.0 - nu) * fz + nu * rl.value) / b;
    r.abs_err_estimate = std::abs(nu / b) * rl.abs_err_estimate;
    r.nodes_used = rl.nodes_used;
    r.eps_sensitivity = std::abs(nu / b) * rl.eps_sensitivity;
    return r;
}

EvalResult ab_integral_hankel(const ABRequest& req) {
    const Complex nu = req.nu.value();
    if (req.nu.is_natural()) {
        throw Error(ErrorCode::OrderIsNaturalNumber, "ab_integral_hankel: order is a natural number");
    }
    const Complex b = req.B.checked(nu);
    const Complex g1 = nu * specfn::complex_gamma(1.0 - nu);
    const Function& f = req.f;
    const HankelIntegrand k = [&](const HankelPoint& p) {
        return ((1.0 - nu) * std::exp(-p.log_w_minus_z) + g1 * std::exp((nu - 1.0) * p.log_w_minus_z)) * f(p.w);
    };
    const HankelResult h = hankel_integrate(k, {req.c, req.z, req.epsilon}, req.tol);
    const Complex pre = 1.0 / (kTwoPiI * b);
    EvalResult r;
    r.formulation = "hankel";
    r.value = pre * h.value;
    r.abs_err_estimate = std::abs(pre) * h.abs_err_estimate;
    r.nodes_used = h.nodes_used;
    r.eps_sensitivity = std::abs(pre) * h.eps_sensitivity;
    return r;
}

EvalResult abr_derivative(const ABRequest& req) {
    const Order& nu = req.nu;
    require_derivative_domain(nu);
    req.series.validate();
    if (is_order_one(nu)) {
        EvalResult r;
        r.value = req.f.derivative()(req.z);
        r.formulation = "limit";
        return r;
    }
    const Complex v = nu.value();
    const Complex b = req.B.checked(v);
    if (nu.is_zero()) {
        EvalResult r;
        r.value = b * req.f(req.z);
        r.formulation = "limit";
        return r;
    }
    const Formulation form = resolve(req);
    require_formulation_domain(form, nu);
    const Complex pre = b / (1.0 - v);
    const Complex x = -v / (1.0 - v);

    if (form == Formulation::series) return scale(rl_series(req.f, req, x, 0.0, req.f(req.z)), pre);

    if (form == Formulation::kernel) {
        // d/dz of the smoothed integral: central differences + one Richardson level
        const Complex h = 1e-4 * (req.z - req.c);
        int terms = 0;
        long nodes = 0;
        auto k_at = [&](Complex zeta) {
            const QuadratureResult q = ml_kernel_integral(req.f, req.c, zeta, req, x, kKernelQuadTol, &terms);
            nodes += q.nodes_used;
            return q.value;
        };
        const Complex d1 = (k_at(req.z + h) - k_at(req.z - h)) / (2.0 * h);
        const Complex d2 = (k_at(req.z + 0.5 * h) - k_at(req.z - 0.5 * h)) / h;
        const Complex rich = (4.0 * d2 - d1) / 3.0;
        EvalResult r;
        r.formulation = "kernel";
        r.value = pre * rich;
        r.abs_err_estimate = std::abs(pre) * std::abs(rich - d2);
        r.terms_used = terms;
        r.nodes_used = nodes;
        return r;
    }

    const Function& f = req.f;
    int terms = 0;
    const HankelIntegrand k = [&](const HankelPoint& p) -> Complex {
        const Complex xw = x * std::exp(v * p.log_w_minus_z);
        const specfn::MLValue t = specfn::modified_double_ml_tail(-1.0, v, -xw, req.series);
        require_converged(t, "ABR contour kernel");
        if (t.terms_used > terms) terms = t.terms_used;
        return t.value * f(p.w) * std::exp(-p.log_w_minus_z);
    };
    const HankelResult hr = hankel_integrate(k, {req.c, req.z, req.epsilon}, req.tol);
    EvalResult r;
    r.formulation = "hankel";
    r.value = pre * (f(req.z) + hr.value / kTwoPiI);
    r.abs_err_estimate = std::abs(pre) * hr.abs_err_estimate / (2.0 * kPi);
    r.eps_sensitivity = std::abs(pre) * hr.eps_sensitivity / (2.0 * kPi);
    r.nodes_used = hr.nodes_used;
    r.terms_used = terms;
    return r;
}

EvalResult abc_derivative(const ABRequest& req) {
    const Order& nu = req.nu;
    require_derivative_domain(nu);
    req.series.validate();
    const Function fp = req.f.derivative();
    if (is_order_one(nu)) {
        EvalResult r;
        r.value = fp(req.z);
        r.formulation = "limit";
        return r;
    }
    const Complex v = nu.value();
    const Complex b = req.B.checked(v);
    const Complex jump = req.f(req.z) - req.f(req.c);
    if (nu.is_zero()) {
        EvalResult r;
        r.value = b * jump;
        r.formulation = "limit";
        return r;
    }
    const Formulation form = resolve(req);
    require_formulation_domain(form, nu);
    const Complex pre = b / (1.0 - v);
    const Complex x = -v / (1.0 - v);

    if (form == Formulation::series) return scale(rl_series(fp, req, x, 1.0, jump), pre);

    if (form == Formulation::kernel) {
        int terms = 0;
        const QuadratureResult q = ml_kernel_integral(fp, req.c, req.z, req, x, req.tol, &terms);
        EvalResult r;
        r.formulation = "kernel";
        r.value = pre * q.value;
        r.abs_err_estimate = std::abs(pre) * q.abs_err_estimate;
        r.nodes_used = q.nodes_used;
        r.terms_used = terms;
        return r;
    }

    int terms = 0;
    const HankelIntegrand k = [&](const HankelPoint& p) -> Complex {
        const Complex xw = x * std::exp(v * p.log_w_minus_z);
        const specfn::MLValue t = specfn::modified_ml_tail(v, xw, req.series);
        require_converged(t, "ABC contour kernel");
        if (t.terms_used > terms) terms = t.terms_used;
        return t.value * fp(p.w);
    };
    const HankelResult hr = hankel_integrate(k, {req.c, req.z, req.epsilon}, req.tol);
    EvalResult r;
    r.formulation = "hankel";
    r.value = pre * (jump + hr.value / kTwoPiI);
    r.abs_err_estimate = std::abs(pre) * hr.abs_err_estimate / (2.0 * kPi);
    r.eps_sensitivity = std::abs(pre) * hr.eps_sensitivity / (2.0 * kPi);
    r.nodes_used = hr.nodes_used;
    r.terms_used = terms;
    return r;
}

namespace {

// pre · Σ_{n>=0} xⁿ k' a'^{...}: term n is xⁿ·k·rate_factor·a^{-(nν+shift)}e^{az}.
EvalResult exp_series(Complex k, Complex a, Complex z, const Order& nu, const MultiplierFunction& B,
                      const SeriesControl& ctl, double shift, Complex rate_factor) {
    require_derivative_domain(nu);
    ctl.validate();
    const Complex v = nu.value();
    EvalResult r;
    r.formulation = "series";
    if (is_order_one(nu)) {
        r.value = k * a * std::exp(a * z);
        r.formulation = "limit";
        return r;
    }
    const Complex b = B.checked(v);
    const Complex x = -v / (1.0 - v);
    const Complex kk = k * rate_factor;
    SeriesAccumulator acc(ctl, kk * rl_infinite_basepoint_exp(a, shift, z));
    Complex xn{1.0, 0.0};
    for (int n = 1; n < ctl.max_terms; ++n) {
        xn *= x;
        if (acc.add(xn * kk * rl_infinite_basepoint_exp(a, static_cast<double>(n) * v + shift, z))) break;
    }
    if (!acc.done()) throw Error(ErrorCode::NotConverged, "exponential AB series did not converge");
    const Complex pre = b / (1.0 - v);
    r.value = pre * acc.sum();
    r.terms_used = acc.terms() + 1;
    r.abs_err_estimate = std::abs(pre) * acc.last_term();
    return r;
}

}  // namespace

EvalResult ab_integral_exp_infinite(Complex k, Complex a, Complex z, const Order& nu, const MultiplierFunction& B) {
    const Complex v = nu.value();
    const Complex b = B.checked(v);
    EvalResult r;
    r.formulation = "kernel";
    r.value = ((1.0 - v) * k * std::exp(a * z) + v * k * rl_infinite_basepoint_exp(a, v, z)) / b;
    return r;
}

EvalResult abr_exp_infinite(Complex k, Complex a, Complex z, const Order& nu, const MultiplierFunction& B,
                            const SeriesControl& ctl) {
    return exp_series(k, a, z, nu, B, ctl, 0.0, 1.0);
}

EvalResult abc_exp_infinite(Complex k, Complex a, Complex z, const Order& nu, const MultiplierFunction& B,
                            const SeriesControl& ctl) {
    // (k e^{az})' = k a e^{az}; I^{nν+1} of it from -∞ is k a·a^{-(nν+1)} e^{az}
    return exp_series(k, a, z, nu, B, ctl, 1.0, a);
}

}  // namespace abcalc
