#ifndef DIVPOLY_IO_HPP
#define DIVPOLY_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "divpoly/curve.hpp"
#include "divpoly/prime_field.hpp"

namespace divpoly {

/// Human-readable form, highest degree first: "3x^4 - 6x^2 - 1", "(1/2)x - 3/4".
std::string to_string(const QPoly& p, std::string_view var = "x");
std::string to_string(const UniPoly<Fp>& p, std::string_view var = "x");

/// Coefficients as exact "p/q" strings, index = exponent.
std::vector<std::string> coeff_strings(const QPoly& p);
QPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs);

/// Comma-separated list of rationals, e.g. "0,-1,0" or "1/2, -3".
std::vector<BigRat> parse_rat_list(std::string_view text);

} // namespace divpoly

#endif // DIVPOLY_IO_HPP
