#pragma once

#include <functional>
#include <string>

#include "function.hpp"
#include "order.hpp"

namespace abcalc {

/// B(ν) in the AB definitions; must be nonzero (|B| > 1e-12) where queried.
class MultiplierFunction {
public:
    enum class Kind : std::uint8_t { constant_one, ab_normalization, user_table };

    MultiplierFunction() = default;  // constant_one

    static MultiplierFunction constant_one();
    /// 1 - ν + ν/Γ(ν)
    static MultiplierFunction ab_normalization();
    static MultiplierFunction user(std::function<Complex(Complex)> fn);

    Kind kind() const { return kind_; }
    Complex operator()(Complex nu) const;

    /// B(ν), throwing MultiplierZero when |B(ν)| <= 1e-12.
    Complex checked(Complex nu) const;

private:
    Kind kind_ = Kind::constant_one;
    std::function<Complex(Complex)> fn_;
};

enum class Formulation : std::uint8_t { kernel, series, hankel, automatic };

const char* to_string(Formulation f) noexcept;

struct ABRequest {
    Function f;
    Complex c{};
    Complex z{1.0, 0.0};
    Order nu;
    MultiplierFunction B;
    double tol = 1e-10;
    Formulation formulation = Formulation::automatic;
    double epsilon = 0.1;
    SeriesControl series;
};

/// ((1-ν) f(z) + ν I^ν f(z)) / B(ν); for Re(ν) <= 0 the RL part is the contour
/// continuation. Every ν is accepted.
EvalResult ab_integral(const ABRequest& req);

/// Single-kernel contour form. Throws OrderIsNaturalNumber for ν ∈ ℕ.
EvalResult ab_integral_hankel(const ABRequest& req);

/// ABR derivative. kernel and series need Re(ν) > 0, hankel needs
/// |Im ν| >= kImFloor; automatic picks series, then hankel. ν = 1 gives f'(z),
/// ν = 0 gives B(0) f(z); negative real ν is rejected.
EvalResult abr_derivative(const ABRequest& req);

/// ABC derivative; same domain rules as abr_derivative. Needs f'.
EvalResult abc_derivative(const ABRequest& req);

/// Operators applied to k·e^{az} from basepoint -∞, summing the RL series
/// term by term with the closed-form RL integrals.
EvalResult ab_integral_exp_infinite(Complex k, Complex a, Complex z, const Order& nu, const MultiplierFunction& B);
EvalResult abr_exp_infinite(Complex k, Complex a, Complex z, const Order& nu, const MultiplierFunction& B,
                            const SeriesControl& ctl = {});
EvalResult abc_exp_infinite(Complex k, Complex a, Complex z, const Order& nu, const MultiplierFunction& B,
                            const SeriesControl& ctl = {});

}  // namespace abcalc
