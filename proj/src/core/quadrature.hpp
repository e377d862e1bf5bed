#pragma once

#include <functional>

#include "types.hpp"

namespace abcalc {

struct QuadratureResult {
    Complex value{};
    double abs_err_estimate = 0.0;
    long nodes_used = 0;
};

namespace quad {

/// Integrand on [0,1] receiving the node x and its complement 1-x, both to
/// full relative precision.
using UnitIntegrand = std::function<Complex(double x, double xc)>;

/// Real-parameter integrand for the adaptive Gauss-Kronrod rule.
using RealIntegrand = std::function<Complex(double t)>;

inline constexpr int kMaxTanhSinhLevel = 12;
inline constexpr int kMaxPanels = 4096;

/// Nested tanh-sinh rule on [0,1]. Tolerates integrable endpoint
/// singularities. Converges when the level-to-level change is below
/// max(rel_tol·|I|, roundoff floor). Throws ToleranceNotReached.
QuadratureResult tanh_sinh(const UnitIntegrand& g, double rel_tol);

/// Globally adaptive G7-K15 on [a,b]; converges when the summed error is
/// below tol·(1+|I|) or the roundoff floor. Throws ToleranceNotReached after
/// kMaxPanels panels.
QuadratureResult gauss_kronrod(const RealIntegrand& g, double a, double b, double tol);

}  // namespace quad
}  // namespace abcalc
