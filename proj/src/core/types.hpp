#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace abcalc {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};
inline constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

// Below this |Im ν| the contour formulations refuse to run: the reflection
// denominators e^{-iπnν} - e^{iπnν} cancel too badly.
inline constexpr double kImFloor = 1e-3;

enum class ErrorCode : std::uint8_t {
    PoleAtNonPositiveInteger,
    NotConverged,
    DomainNotSupported,
    DomainError,
    ParseError,
    EvalDomainError,
    ToleranceNotReached,
    EpsilonUnstable,
    OrderIsNegativeInteger,
    OrderIsNaturalNumber,
    MultiplierZero,
    ZeroRate,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Truncation policy shared by every infinite series in the library.
struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 500;
    int consecutive_small = 3;

    /// Throws InvalidArgument when the invariants (rel_tol > 0, max_terms >= 8,
    /// consecutive_small >= 1) do not hold.
    void validate() const;
};

/// Value plus diagnostics returned by every operator.
struct EvalResult {
    Complex value{};
    double abs_err_estimate = 0.0;
    int terms_used = 0;
    long nodes_used = 0;
    bool converged = true;
    std::string formulation;
    // |value(ε) - value(ε/2)| for contour formulations, 0 otherwise.
    double eps_sensitivity = 0.0;
};

inline bool is_finite(Complex v) noexcept { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace abcalc
