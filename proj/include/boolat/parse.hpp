#ifndef BOOLAT_PARSE_HPP
#define BOOLAT_PARSE_HPP

#include <string>

#include "boolat/polyq.hpp"

namespace boolat::polycore {

// Parses the polynomial text grammar used by the CLI and fixtures:
// signed integer or num/den rational coefficients, variable X, ^ powers,
// optional * between coefficient and X, whitespace-insensitive.
// Examples: "X^6 - 2", "1/2*X^2 + X - 3", "-X + 4/3".
// Throws ParseError.
PolyQ parse_polyq(const std::string& text);

} // namespace boolat::polycore

#endif
