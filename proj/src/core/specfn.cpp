#include "specfn.hpp"

#include <array>
#include <cmath>

#include "series.hpp"

namespace abcalc::specfn {
namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,           -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

constexpr double kStirlingMin = 15.0;

bool near_nonpositive_integer(Complex s, double tol) {
    if (std::abs(s.imag()) > tol) return false;
    const double r = std::round(s.real());
    return r <= 0.0 && std::abs(s.real() - r) <= tol;
}

bool exact_nonpositive_integer(Complex s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

// Stirling series, Re(s) >= 0.5. Shifts up until |s| is large enough.
Complex log_gamma_right(Complex s) {
    Complex shift_product{1.0, 0.0};
    bool shifted = false;
    while (std::abs(s) < kStirlingMin || s.real() < 0.5) {
        shift_product *= s;
        s += 1.0;
        shifted = true;
    }
    const Complex inv = 1.0 / s;
    const Complex inv2 = inv * inv;
    Complex series = kStirling.back();
    for (int k = static_cast<int>(kStirling.size()) - 2; k >= 0; --k) series = series * inv2 + kStirling[k];
    Complex lg = (s - 0.5) * std::log(s) - s + kHalfLogTwoPi + series * inv;
    if (shifted) lg -= std::log(shift_product);
    return lg;
}

// log(1/Γ(s)); sets *zero when s is exactly a pole of Γ.
Complex log_reciprocal_gamma(Complex s, bool* zero) {
    *zero = false;
    if (exact_nonpositive_integer(s)) {
        *zero = true;
        return {};
    }
    if (s.real() >= 0.5) return -log_gamma_right(s);
    const Complex sp = sin_pi(s);
    if (sp == Complex{}) {
        *zero = true;
        return {};
    }
    return std::log(sp / kPi) + log_gamma_right(1.0 - s);
}

// exp(a) with a guard against overflow producing NaN phases.
Complex safe_exp(Complex a) {
    if (a.real() < -745.0) return {};
    return std::exp(a);
}

}  // namespace

Complex sin_pi(Complex s) {
    const double x = s.real();
    const double y = s.imag();
    // reduce x to [-1, 1]
    const double r = x - 2.0 * std::round(0.5 * x);
    double sr = 0.0;
    double cr = 0.0;
    if (r == std::round(r)) {
        sr = 0.0;
        cr = (r == 0.0) ? 1.0 : -1.0;
    } else if (std::abs(r) == 0.5) {
        sr = r > 0 ? 1.0 : -1.0;
        cr = 0.0;
    } else {
        sr = std::sin(kPi * r);
        cr = std::cos(kPi * r);
    }
    if (y == 0.0) return {sr, 0.0};
    return {sr * std::cosh(kPi * y), cr * std::sinh(kPi * y)};
}

Complex log_gamma(Complex s) {
    if (near_nonpositive_integer(s, 0.0)) throw Error(ErrorCode::PoleAtNonPositiveInteger, "log_gamma: pole");
    if (s.real() >= 0.5) return log_gamma_right(s);
    // Γ(s) = π / (sin(πs) Γ(1-s))
    return std::log(kPi / sin_pi(s)) - log_gamma_right(1.0 - s);
}

Complex complex_gamma(Complex s) {
    if (near_nonpositive_integer(s, 1e-12)) {
        throw Error(ErrorCode::PoleAtNonPositiveInteger, "complex_gamma: argument is a non-positive integer");
    }
    if (s.real() >= 0.5) {
        // Small positive integers are returned exactly.
        if (s.imag() == 0.0 && s.real() == std::round(s.real()) && s.real() <= 23.0) {
            double f = 1.0;
            for (int k = 2; k < static_cast<int>(s.real()); ++k) f *= k;
            return {f, 0.0};
        }
        return std::exp(log_gamma_right(s));
    }
    return kPi / (sin_pi(s) * std::exp(log_gamma_right(1.0 - s)));
}

Complex reciprocal_gamma(Complex s) {
    bool zero = false;
    const Complex l = log_reciprocal_gamma(s, &zero);
    if (zero) return {};
    if (s.imag() == 0.0 && s.real() >= 1.0 && s.real() <= 23.0 && s.real() == std::round(s.real())) {
        return 1.0 / complex_gamma(s);
    }
    return safe_exp(l);
}

Complex complex_binomial(Complex mu, int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "complex_binomial: n must be non-negative");
    Complex b{1.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        b *= (mu - static_cast<double>(k - 1)) / static_cast<double>(k);
        if (b == Complex{}) break;
    }
    return b;
}

MLValue mittag_leffler(Complex nu, Complex beta, Complex x, const SeriesControl& ctl) {
    ctl.validate();
    if (!(nu.real() > 0.0)) throw Error(ErrorCode::DomainNotSupported, "mittag_leffler: requires Re(nu) > 0");

    const Complex first = reciprocal_gamma(beta);
    if (x == Complex{}) return {first, 1, true, std::abs(first)};

    SeriesAccumulator acc(ctl, first);
    const Complex log_x = std::log(x);
    for (int n = 1; n < ctl.max_terms; ++n) {
        bool zero = false;
        const Complex lrg = log_reciprocal_gamma(static_cast<double>(n) * nu + beta, &zero);
        const Complex term = zero ? Complex{} : safe_exp(static_cast<double>(n) * log_x + lrg);
        if (acc.add(term)) break;
    }
    return {acc.sum(), acc.terms() + 1, acc.done(), acc.max_term()};
}

namespace {

// Γ(-nν)xⁿ through the reflection-rewritten form
//   2πi / (e^{-iπnν} - e^{iπnν}) · xⁿ / Γ(1+nν),
// evaluated in log space. Returns 0 when the magnitude underflows.
Complex reflected_tail_term(Complex nu, int n, Complex log_x) {
    const double dn = static_cast<double>(n);
    const Complex arg = kI * kPi * dn * nu;
    // pick the decaying exponential q; 1/(1/q - q) = q/(1-q²) (Im ν > 0) or
    // -p/(1-p²) with p = e^{-iπnν} (Im ν < 0).
    const bool upper = nu.imag() > 0.0;
    const Complex log_q = upper ? arg : -arg;
    const Complex q2 = safe_exp(2.0 * log_q);
    const double sign = upper ? 1.0 : -1.0;
    bool zero = false;
    const Complex lrg = log_reciprocal_gamma(1.0 + dn * nu, &zero);
    if (zero) return {};
    return sign * kTwoPiI * safe_exp(log_q + dn * log_x + lrg) / (1.0 - q2);
}

void require_off_axis(Complex nu, const char* who) {
    if (std::abs(nu.imag()) < kImFloor) {
        throw Error(ErrorCode::DomainNotSupported, std::string(who) + ": requires |Im(nu)| >= 1e-3");
    }
}

}  // namespace

MLValue modified_ml_tail(Complex nu, Complex x, const SeriesControl& ctl) {
    ctl.validate();
    require_off_axis(nu, "modified_ml_tail");
    if (x == Complex{}) return {{}, 0, true, 0.0};

    SeriesAccumulator acc(ctl);
    const Complex log_x = std::log(x);
    for (int n = 1; n <= ctl.max_terms; ++n) {
        if (acc.add(reflected_tail_term(nu, n, log_x))) break;
    }
    return {acc.sum(), acc.terms(), acc.done(), acc.max_term()};
}

MLValue modified_double_ml_tail(Complex mu, Complex nu, Complex x, const SeriesControl& ctl) {
    ctl.validate();
    require_off_axis(nu, "modified_double_ml_tail");
    if (x == Complex{}) return {{}, 0, true, 0.0};

    SeriesAccumulator acc(ctl);
    const Complex log_x = std::log(x);
    Complex binom{1.0, 0.0};
    for (int n = 1; n <= ctl.max_terms; ++n) {
        binom *= (mu - static_cast<double>(n - 1)) / static_cast<double>(n);
        if (binom == Complex{}) {
            // non-negative integer μ: the series is a polynomial
            acc.mark_terminated();
            break;
        }
        // Γ(1-nν) = -nν Γ(-nν)
        const Complex term = binom * (-static_cast<double>(n) * nu) * reflected_tail_term(nu, n, log_x);
        if (acc.add(term)) break;
    }
    return {acc.sum(), acc.terms(), acc.done(), acc.max_term()};
}

}  // namespace abcalc::specfn
