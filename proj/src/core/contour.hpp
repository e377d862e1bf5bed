#pragma once

#include <functional>

#include "function.hpp"
#include "quadrature.hpp"

namespace abcalc {

/// Hankel contour from c around z and back; epsilon is the circle radius in
/// units of |z - c|.
struct ContourSpec {
    Complex c{};
    Complex z{};
    double epsilon = 0.1;

    /// Throws InvalidArgument unless c != z and 0 < epsilon < 1.
    void validate() const;
};

/// A point w on [c, z] with both distances carried to full precision.
struct SegmentPoint {
    Complex w{};
    Complex z_minus_w{};
    Complex w_minus_c{};
    Complex log_z_minus_w{};  // principal Log(z - c) + real log of the ratio
};

/// A point w on the Hankel contour with the branch of log(w - z) already
/// selected: arg = arg(z - c) - π on H1, + π on H3, continuous on H2.
struct HankelPoint {
    Complex w{};
    Complex log_w_minus_z{};
};

using SegmentIntegrand = std::function<Complex(Complex w)>;
using SingularIntegrand = std::function<Complex(const SegmentPoint&)>;
using HankelIntegrand = std::function<Complex(const HankelPoint&)>;

struct HankelResult : QuadratureResult {
    double eps_sensitivity = 0.0;  // |value(ε) - value(ε/2)|
};

/// ∫ g(w) dw along the straight segment a → b.
QuadratureResult segment_integrate(const SegmentIntegrand& g, Complex a, Complex b, double tol);

/// ∫_c^z (z-w)^{s-1} g(w) dw for Re(s) > 0, principal branch of (z-c)^s.
/// The substitution w = z - (z-c)u^m, m = ceil(1/Re s), leaves a bounded
/// integrand. Throws DomainError if Re(s) <= 0.
QuadratureResult singular_segment_integrate(const SingularIntegrand& g, Complex c, Complex z, Complex s,
                                            double tol);
QuadratureResult singular_segment_integrate(const Function& f, Complex c, Complex z, Complex s, double tol);

/// ∫_H g dw over H1 ∪ H2 ∪ H3, evaluated at ε and at ε/2. The ε value is
/// returned. Throws EpsilonUnstable when the two disagree by more than
/// 10·max(tol·(1+|v|), combined error estimate).
HankelResult hankel_integrate(const HankelIntegrand& g, const ContourSpec& spec, double tol);

/// Single-ε evaluation, no sensitivity check.
QuadratureResult hankel_integrate_once(const HankelIntegrand& g, const ContourSpec& spec, double tol);

}  // namespace abcalc
