#pragma once

#include <functional>
#include <string>

#include "function.hpp"

namespace abcalc {

/// Wraps ζ ↦ op(ζ) as a Function. Values are cached by the exact bit pattern
/// of ζ, so quadratures that revisit a node pay once. Thread-safe.
Function memoized_image(std::function<Complex(Complex)> op, std::string label);

}  // namespace abcalc
