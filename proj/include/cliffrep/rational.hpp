#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliffrep {

using Rational = mpq_class;

/// "-3/2" or "7"; always canonical.
std::string to_string(const Rational& x);

/// Accepts "[+-]digits" or "[+-]digits/digits". Throws DivisionByZero for a zero
/// denominator and std::invalid_argument for anything else malformed.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace cliffrep
