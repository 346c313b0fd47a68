#ifndef CUBIC27_EXACT_PARSE_HPP
#define CUBIC27_EXACT_PARSE_HPP

#include "cubic27/exact/polynomial.hpp"

#include <string_view>

namespace cubic27 {

/// Parses a rational polynomial expression such as
/// "-(w+x+y+z)^3 + w^3 + 3/2*x*y". Supports + - * ^, parentheses, rational
/// constants and division by constants. Variable names follow the text
/// serialization for the given arity (x,y,z,w / x,y,z / s,t / t), so every
/// string produced by Polynomial::str() parses back to the same value.
MPoly parse_polynomial(std::string_view text, int nvars);

} // namespace cubic27

#endif
