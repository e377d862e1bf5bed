#pragma once

#include "ab.hpp"

namespace abcalc {

enum class IABFormulation : std::uint8_t { series, integral, hankel, automatic };

const char* to_string(IABFormulation f) noexcept;

struct IABRequest {
    Function f;
    Complex c{};
    Complex z{1.0, 0.0};
    Order nu;
    Complex mu{};
    MultiplierFunction B;
    double tol = 1e-10;
    IABFormulation formulation = IABFormulation::automatic;
    double epsilon = 0.1;
    SeriesControl series{1e-12, 800, 3};
};

/// Iterated AB differintegral of order (ν, μ). μ = 1 is the AB integral and
/// μ = -1 the ABR derivative. ν on the negative real axis and |ν - 1| < 1e-6
/// are rejected. For μ ∈ ℕ the series is a finite sum.
EvalResult iab(const IABRequest& req);

/// Largest |I^{ν,μ}(I^{ν,ρ} f) - I^{ν,μ+ρ} f| over the nodes c + t(z-c),
/// t ∈ {0.5, 1}. The inner operator is evaluated exactly at every outer
/// quadrature node.
double iab_compose_check(const Order& nu, Complex mu, Complex rho, const Function& f, Complex c, Complex z,
                         const MultiplierFunction& B = {}, double tol = 1e-10);

}  // namespace abcalc
