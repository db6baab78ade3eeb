#pragma once

#include "sandwich/scalar.hpp"

#include <string>

namespace sandwich {

/// Certificate rendering: explicit sign, plain positional notation for
/// |v| in [1e-3, 1e6), scientific otherwise; zero renders as "+0".
std::string format_decimal(const Scalar& value, int significant = 17);

/// Plain %g-style rendering with the given significant digits (CSV output).
std::string format_significant(const Scalar& value, int significant);

}  // namespace sandwich
