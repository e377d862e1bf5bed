#pragma once

#include "types.hpp"

namespace abcalc::specfn {

struct MLValue {
    Complex value{};
    int terms_used = 0;
    bool converged = false;
    // Largest |term| seen; |value| much smaller than this signals cancellation.
    double max_term = 0.0;
};

/// sin(πs), exact zeros at the integers.
Complex sin_pi(Complex s);

/// log Γ(s) on some branch (only exp() of it is meaningful). s must not be a pole.
Complex log_gamma(Complex s);

/// Γ(s). Throws PoleAtNonPositiveInteger within 1e-12 of {0, -1, -2, ...}.
Complex complex_gamma(Complex s);

/// 1/Γ(s), entire; exactly 0 at the non-positive integers.
Complex reciprocal_gamma(Complex s);

/// Binomial coefficient (μ choose n) via the product recurrence, so integer
/// μ < n gives an exact 0.
Complex complex_binomial(Complex mu, int n);

/// E_{ν,β}(x) = Σ xⁿ/Γ(nν+β). Requires Re(ν) > 0.
MLValue mittag_leffler(Complex nu, Complex beta, Complex x, const SeriesControl& ctl = {});

/// Σ_{n≥1} Γ(-nν) xⁿ: the modified Mittag-Leffler series without its
/// divergent n = 0 term. Requires |Im ν| >= kImFloor.
MLValue modified_ml_tail(Complex nu, Complex x, const SeriesControl& ctl = {});

/// Σ_{n≥1} (μ choose n) Γ(1-nν) xⁿ. The n = 0 term (equal to 1) is left to the
/// caller. Requires |Im ν| >= kImFloor.
MLValue modified_double_ml_tail(Complex mu, Complex nu, Complex x, const SeriesControl& ctl = {});

}  // namespace abcalc::specfn
