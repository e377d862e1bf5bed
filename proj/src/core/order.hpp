#pragma once

#include <cmath>

#include "types.hpp"

namespace abcalc {

/// Complex differintegration order with the domain tests the operators need.
class Order {
public:
    constexpr Order() = default;
    constexpr Order(Complex v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    constexpr Order(double re, double im = 0.0) : v_(re, im) {}  // NOLINT

    constexpr Complex value() const { return v_; }
    constexpr double re() const { return v_.real(); }
    constexpr double im() const { return v_.imag(); }

    bool is_real(double tol = 0.0) const { return std::abs(v_.imag()) <= tol; }
    bool is_zero(double tol = 1e-14) const { return std::abs(v_) <= tol; }

    /// True when the order sits on an integer k (within tol), storing k.
    bool near_integer(long* k = nullptr, double tol = 1e-12) const {
        if (!is_real(tol)) return false;
        const double r = std::round(v_.real());
        if (std::abs(v_.real() - r) > tol) return false;
        if (k) *k = static_cast<long>(r);
        return true;
    }
    bool is_negative_integer(double tol = 1e-12) const {
        long k = 0;
        return near_integer(&k, tol) && k < 0;
    }
    bool is_natural(double tol = 1e-12) const {
        long k = 0;
        return near_integer(&k, tol) && k > 0;
    }
    /// ν ∈ ℝ⁻ (strictly negative reals).
    bool is_negative_real(double tol = 1e-14) const { return is_real(tol) && v_.real() < 0.0; }
    bool contour_admissible() const { return std::abs(v_.imag()) >= kImFloor; }

private:
    Complex v_{};
};

}  // namespace abcalc
