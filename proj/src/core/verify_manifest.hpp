#pragma once

// Fixed parameter grids for the verification suites. Bump kManifestVersion
// whenever a grid changes so stored reports stay comparable.

#include <array>
#include <complex>
#include <string_view>

namespace abcalc::verify::manifest {

inline constexpr std::string_view kManifestVersion = "abcalc-verify/3";

using C = std::complex<double>;

// golden: power functions (z-c)^α, B ≡ 1
inline constexpr std::array<double, 3> kPowerAlpha = {0.5, 1.0, 2.0};
inline constexpr std::array<C, 4> kPowerNu = {C{0.3, 0.0}, C{0.5, 0.0}, C{0.7, 0.0}, C{0.5, 0.4}};
inline constexpr std::array<double, 3> kPowerDz = {0.5, 1.0, 2.0};
inline constexpr C kPowerBasepoint{0.5, 0.25};

// golden: k e^{az} from c = -∞; cases with |(-ν/(1-ν)) a^{-ν}| > kExpGuard are skipped
inline constexpr std::array<C, 4> kExpRate = {C{1.0, 0.0}, C{2.0, 0.0}, C{4.0, 0.0}, C{2.0, 2.0}};
inline constexpr std::array<C, 4> kExpNu = {C{0.3, 0.0}, C{0.5, 0.0}, C{0.7, 0.0}, C{0.5, 0.4}};
inline constexpr std::array<C, 2> kExpZ = {C{0.0, 0.0}, C{0.5, -0.25}};
inline constexpr double kExpGuard = 0.9;

// identity and equivalence suites
inline constexpr std::array<std::string_view, 5> kInversionFunctions = {
    "pow(z-0,1)", "exp(z)", "pow(z-0,1.5)", "pow(z-0,2)+exp(z)", "cos(z)",
};
inline constexpr std::array<C, 2> kInversionNu = {C{0.5, 0.0}, C{0.6, 0.3}};
inline constexpr std::array<std::string_view, 3> kEquivalenceFunctions = {
    "pow(z-0,1.5)", "exp(z)", "pow(z-0,2)+exp(z)",
};
inline constexpr std::array<C, 4> kEquivalenceNu = {C{0.3, 0.0}, C{0.7, 0.0}, C{0.5, 0.4}, C{0.5, -0.4}};
inline constexpr std::array<C, 4> kABIntegralHankelNu = {C{0.5, 0.0}, C{0.5, 0.5}, C{0.3, -0.2}, C{-0.4, 0.6}};

inline constexpr unsigned kRandomSeed = 20240611U;
inline constexpr int kSemigroupPairs = 10;
inline constexpr int kCauchyCases = 20;

// continuation arcs ν = r e^{iθ}
inline constexpr std::array<double, 2> kArcRadius = {0.3, 0.7};
inline constexpr std::array<double, 4> kArcThetaOverlap = {0.1, -0.1, 0.8, -0.8};
inline constexpr std::array<double, 2> kArcThetaNegative = {2.0, -2.0};

// ν → 1 along 1 - δ(1+i), f = z², c = 0, z = 0.1
inline constexpr std::array<double, 3> kNearOneDelta = {0.01, 0.0075, 0.005};
inline constexpr double kNearOneZ = 0.1;
inline constexpr double kNearOneBound = 0.05;

inline constexpr std::array<double, 3> kEpsilonSweep = {0.2, 0.1, 0.02};

}  // namespace abcalc::verify::manifest
