#pragma once

#include <string>
#include <string_view>

#include "lemni/errors.hpp"

namespace lemni {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// General-format decimal string with the given number of significant digits.
std::string format_double(double v, int digits);

/// Complex in "a+bi" form (shortest round-trip components).
std::string format_complex(Complex z);
std::string format_complex(Complex z, int digits);

/// Parses the literal forms "a", "bi", "a+bi", "a-bi" where a, b are
/// decimal reals (scientific notation allowed). Throws usage_error on
/// anything else.
Complex parse_complex(std::string_view text);

} // namespace lemni
