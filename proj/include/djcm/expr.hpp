#pragma once

#include <string_view>

#include "djcm/angle.hpp"

namespace djcm {

/// Evaluates a small arithmetic expression: numbers, `pi`, + - * /, unary minus,
/// parentheses and the functions atan, sqrt, sin, cos. Throws InvalidConfig on a
/// syntax error.
double eval_expr(std::string_view text);

/// Parses an angle in radians. The literal forms `0`, `pi/4`, `pi/2` and
/// `atan(p)` / `atan(p/q)` with integer p, q yield an exact-tangent Angle.
Angle parse_angle(std::string_view text);

}  // namespace djcm
