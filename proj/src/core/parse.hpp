#ifndef ELW_CORE_PARSE_HPP
#define ELW_CORE_PARSE_HPP

#include <string>

namespace elw {

// Angle token: a plain decimal ("1.5708", "-2"), or a pi fraction
// ("pi", "2pi/3", "-pi/2", "3pi"). Throws parse_error.
double parse_angle(const std::string& token);

// Rational/sqrt3 coefficient token from the generator-table format:
// "0", "1", "-2", "3/2", "sqrt3", "-3sqrt3/4", "2/sqrt3". Throws parse_error.
double parse_coefficient(const std::string& token);

}  // namespace elw

#endif
