#pragma once

#include <string>

#include "lissaknot/exact_angle.hpp"

namespace lissaknot {

// Parses an exact phase expression: rationals, 'pi', parentheses, + - * /,
// unary minus. '*' needs a pure rational on one side, '/' a nonzero pure
// rational divisor; decimals are exact shorthand ("0.5" = 1/2). Examples:
// "0", "1/2", "pi/5", "(19-3*pi)/10". Throws bad_input on anything else.
ExactAngle parse_phase(const std::string& text);

} // namespace lissaknot
