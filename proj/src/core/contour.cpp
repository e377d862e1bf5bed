#include "contour.hpp"

#include <algorithm>
#include <cmath>

namespace abcalc {

void ContourSpec::validate() const {
    if (c == z) throw Error(ErrorCode::InvalidArgument, "contour: basepoint c must differ from z");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::InvalidArgument, "contour: need 0 < epsilon < 1");
    if (!is_finite(c) || !is_finite(z)) throw Error(ErrorCode::InvalidArgument, "contour: non-finite endpoint");
}

QuadratureResult segment_integrate(const SegmentIntegrand& g, Complex a, Complex b, double tol) {
    const Complex d = b - a;
    if (d == Complex{}) return {};
    QuadratureResult r = quad::gauss_kronrod([&](double t) { return g(a + t * d); }, 0.0, 1.0, tol);
    r.value *= d;
    r.abs_err_estimate *= std::abs(d);
    return r;
}

QuadratureResult singular_segment_integrate(const SingularIntegrand& g, Complex c, Complex z, Complex s,
                                            double tol) {
    if (!(s.real() > 0.0)) throw Error(ErrorCode::DomainError, "singular_segment_integrate: requires Re(s) > 0");
    if (c == z) return {};
    const Complex d = z - c;
    const Complex log_d = std::log(d);
    const double m = std::ceil(1.0 / s.real() - 1e-12);
    const Complex scale = std::exp(s * log_d) * m;
    const Complex ms1 = m * s - 1.0;

    // u = x; u^m = e^{m log u}; 1 - u^m = -expm1(m log u)
    auto integrand = [&](double x, double xc) -> Complex {
        const double log_u = x < 0.5 ? std::log(x) : std::log1p(-xc);
        const double um = std::exp(m * log_u);
        const double one_minus_um = -std::expm1(m * log_u);
        SegmentPoint p;
        p.z_minus_w = d * um;
        p.w_minus_c = d * one_minus_um;
        p.w = um < 0.5 ? z - p.z_minus_w : c + p.w_minus_c;
        p.log_z_minus_w = log_d + m * log_u;
        const Complex gv = g(p);
        if (gv == Complex{}) return {};
        return std::exp(ms1 * log_u) * gv;
    };
    QuadratureResult r = quad::tanh_sinh(integrand, tol);
    r.value *= scale;
    r.abs_err_estimate *= std::abs(scale);
    return r;
}

QuadratureResult singular_segment_integrate(const Function& f, Complex c, Complex z, Complex s, double tol) {
    return singular_segment_integrate([&](const SegmentPoint& p) { return f.eval_near(c, p.w, p.w_minus_c); }, c, z,
                                      s, tol);
}

QuadratureResult hankel_integrate_once(const HankelIntegrand& g, const ContourSpec& spec, double tol) {
    spec.validate();
    const Complex d = spec.z - spec.c;
    const Complex log_d = std::log(d);
    const double eps = spec.epsilon;

    // H1 ∪ H3 share the points w = z - r(z-c), r ∈ [ε, 1]; H1 runs inward with
    // arg(w-z) = arg(z-c) - π, H3 outward with + π. Together:
    //   (z-c) ∫_ε^1 [g_H1 - g_H3] dr
    auto straight = [&](double r) -> Complex {
        const Complex w = spec.z - r * d;
        const Complex base = std::log(r) + log_d;
        const Complex g1 = g({w, base - kI * kPi});
        const Complex g3 = g({w, base + kI * kPi});
        return g1 - g3;
    };
    QuadratureResult lines = quad::gauss_kronrod(straight, eps, 1.0, tol);
    lines.value *= d;
    lines.abs_err_estimate *= std::abs(d);

    // H2: w = z + ε e^{iθ}(z-c), θ: -π → π, dw = iε e^{iθ}(z-c) dθ
    const Complex log_eps_d = std::log(eps) + log_d;
    auto arc = [&](double theta) -> Complex {
        const Complex e = std::polar(1.0, theta);
        const Complex w = spec.z + eps * e * d;
        return g({w, log_eps_d + kI * theta}) * (kI * eps * e * d);
    };
    QuadratureResult circle = quad::gauss_kronrod(arc, -kPi, kPi, tol);

    QuadratureResult out;
    out.value = lines.value + circle.value;
    out.abs_err_estimate = lines.abs_err_estimate + circle.abs_err_estimate;
    out.nodes_used = lines.nodes_used * 2 + circle.nodes_used;
    return out;
}

HankelResult hankel_integrate(const HankelIntegrand& g, const ContourSpec& spec, double tol) {
    const QuadratureResult a = hankel_integrate_once(g, spec, tol);
    ContourSpec half = spec;
    half.epsilon = 0.5 * spec.epsilon;
    const QuadratureResult b = hankel_integrate_once(g, half, tol);
    const double diff = std::abs(a.value - b.value);
    const double allowed = 10.0 * std::max(tol * (1.0 + std::abs(a.value)), a.abs_err_estimate + b.abs_err_estimate);
    if (!(diff <= allowed)) {
        throw Error(ErrorCode::EpsilonUnstable, "hankel_integrate: value changes by " + std::to_string(diff) +
                                                    " between epsilon and epsilon/2");
    }
    HankelResult r;
    r.value = a.value;
    r.abs_err_estimate = a.abs_err_estimate;
    r.nodes_used = a.nodes_used + b.nodes_used;
    r.eps_sensitivity = diff;
    return r;
}

}  // namespace abcalc
