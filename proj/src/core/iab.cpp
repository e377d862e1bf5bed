#include "iab.hpp"

#include <algorithm>
#include <cmath>

#include "compose.hpp"
#include "contour.hpp"
#include "rl.hpp"
#include "series.hpp"
#include "specfn.hpp"

namespace abcalc {

const char* to_string(IABFormulation f) noexcept {
    switch (f) {
        case IABFormulation::series: return "series";
        case IABFormulation::integral: return "integral";
        case IABFormulation::hankel: return "hankel";
        case IABFormulation::automatic: return "auto";
    }
    return "auto";
}

namespace {

constexpr double kNearOne = 1e-6;

IABFormulation resolve(const IABRequest& req) {
    if (req.formulation != IABFormulation::automatic) return req.formulation;
    if (req.nu.re() > 0.0) return IABFormulation::series;
    if (req.nu.contour_admissible()) return IABFormulation::hankel;
    throw Error(ErrorCode::DomainNotSupported, "iab: no formulation covers this order");
}

EvalResult iab_series(const IABRequest& req, Complex y) {
    const Complex nu = req.nu.value();
    SeriesAccumulator acc(req.series, req.f(req.z));
    EvalResult r;
    r.formulation = "series";
    Complex coeff{1.0, 0.0};  // binom(μ,n) yⁿ
    for (int n = 1; n < req.series.max_terms; ++n) {
        coeff *= (req.mu - static_cast<double>(n - 1)) / static_cast<double>(n) * y;
        if (coeff == Complex{}) {
            acc.mark_terminated();
            break;
        }
        RLRequest rr{req.f, req.c, req.z, Order(static_cast<double>(n) * nu), req.tol, req.epsilon};
        const EvalResult term = rl_integral(rr);
        r.abs_err_estimate += std::abs(coeff) * term.abs_err_estimate;
        r.nodes_used += term.nodes_used;
        if (acc.add(coeff * term.value)) break;
    }
    if (!acc.done()) throw Error(ErrorCode::NotConverged, "iab series did not converge within max_terms");
    r.value = acc.sum();
    r.terms_used = acc.terms() + 1;
    r.abs_err_estimate += acc.last_term();
    return r;
}

// ∫_c^z (z-w)^{ν-1} Σ_{n>=1} binom(μ,n) yⁿ (z-w)^{(n-1)ν}/Γ(nν) f(w) dw
EvalResult iab_integral(const IABRequest& req, Complex y) {
    const Complex nu = req.nu.value();
    int terms = 0;
    const SingularIntegrand k = [&](const SegmentPoint& p) -> Complex {
        const Complex step = y * std::exp(nu * p.log_z_minus_w);
        SeriesAccumulator acc(req.series);
        Complex coeff = req.mu * y;  // binom(μ,n) yⁿ (z-w)^{(n-1)ν}
        for (int n = 1; n <= req.series.max_terms; ++n) {
            if (n > 1) coeff *= (req.mu - static_cast<double>(n - 1)) / static_cast<double>(n) * step;
            if (coeff == Complex{}) {
                acc.mark_terminated();
                break;
            }
            if (acc.add(coeff * specfn::reciprocal_gamma(static_cast<double>(n) * nu))) break;
        }
        if (!acc.done()) throw Error(ErrorCode::NotConverged, "iab integral kernel did not converge");
        terms = std::max(terms, acc.terms());
        return acc.sum() * req.f.eval_near(req.c, p.w, p.w_minus_c);
    };
    EvalResult r;
    r.formulation = "integral";
    const Complex fz = req.f(req.z);
    if (req.c == req.z) {
        r.value = fz;
        return r;
    }
    const QuadratureResult q = singular_segment_integrate(k, req.c, req.z, nu, req.tol);
    r.value = fz + q.value;
    r.abs_err_estimate = q.abs_err_estimate;
    r.nodes_used = q.nodes_used;
    r.terms_used = terms;
    return r;
}

EvalResult iab_hankel(const IABRequest& req, Complex y) {
    const Complex nu = req.nu.value();
    const Function& f = req.f;
    int terms = 0;
    const HankelIntegrand k = [&](const HankelPoint& p) -> Complex {
        const specfn::MLValue t =
            specfn::modified_double_ml_tail(req.mu, nu, y * std::exp(nu * p.log_w_minus_z), req.series);
        if (!t.converged) throw Error(ErrorCode::NotConverged, "iab contour kernel did not converge");
        terms = std::max(terms, t.terms_used);
        return t.value * f(p.w) * std::exp(-p.log_w_minus_z);
    };
    const HankelResult h = hankel_integrate(k, {req.c, req.z, req.epsilon}, req.tol);
    EvalResult r;
    r.formulation = "hankel";
    r.value = f(req.z) + h.value / kTwoPiI;
    r.abs_err_estimate = h.abs_err_estimate / (2.0 * kPi);
    r.eps_sensitivity = h.eps_sensitivity / (2.0 * kPi);
    r.nodes_used = h.nodes_used;
    r.terms_used = terms;
    return r;
}

}  // namespace

EvalResult iab(const IABRequest& req) {
    const Order& nu = req.nu;
    req.series.validate();
    if (nu.is_negative_real()) throw Error(ErrorCode::DomainNotSupported, "iab: nu on the negative real axis");
    if (std::abs(nu.value() - 1.0) < kNearOne) throw Error(ErrorCode::DomainNotSupported, "iab: nu = 1 is excluded");

    if (req.mu == Complex{}) {
        EvalResult r;
        r.value = req.f(req.z);
        r.formulation = "limit";
        return r;
    }
    const Complex v = nu.value();
    const Complex b = req.B.checked(v);
    // ((1-ν)/B)^μ on principal branches
    const Complex pre = std::exp(req.mu * (std::log(1.0 - v) - std::log(b)));
    if (nu.is_zero()) {
        EvalResult r;
        r.value = pre * req.f(req.z);
        r.formulation = "limit";
        return r;
    }
    const IABFormulation form = resolve(req);
    if (form == IABFormulation::hankel) {
        if (!nu.contour_admissible()) {
            throw Error(ErrorCode::DomainNotSupported, "iab: hankel formulation requires |Im(nu)| >= 1e-3");
        }
    } else if (!(nu.re() > 0.0)) {
        throw Error(ErrorCode::DomainNotSupported,
                    std::string("iab: ") + to_string(form) + " formulation requires Re(nu) > 0");
    }
    const Complex y = v / (1.0 - v);
    EvalResult r;
    switch (form) {
        case IABFormulation::series: r = iab_series(req, y); break;
        case IABFormulation::integral: r = iab_integral(req, y); break;
        default: r = iab_hankel(req, y); break;
    }
    r.value *= pre;
    r.abs_err_estimate *= std::abs(pre);
    r.eps_sensitivity *= std::abs(pre);
    return r;
}

double iab_compose_check(const Order& nu, Complex mu, Complex rho, const Function& f, Complex c, Complex z,
                         const MultiplierFunction& B, double tol) {
    IABRequest base;
    base.f = f;
    base.c = c;
    base.nu = nu;
    base.B = B;
    base.tol = tol;

    IABRequest inner_req = base;
    inner_req.mu = rho;
    const Function inner = memoized_image(
        [inner_req](Complex zeta) {
            IABRequest r = inner_req;
            r.z = zeta;
            return iab(r).value;
        },
        "iab_inner");

    double worst = 0.0;
    for (double t : {0.5, 1.0}) {
        const Complex zt = c + t * (z - c);
        IABRequest outer = base;
        outer.f = inner;
        outer.z = zt;
        outer.mu = mu;
        IABRequest direct = base;
        direct.z = zt;
        direct.mu = mu + rho;
        worst = std::max(worst, std::abs(iab(outer).value - iab(direct).value));
    }
    return worst;
}

}  // namespace abcalc
