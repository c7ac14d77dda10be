#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rdisc {

/// Exact rational scalar used throughout the library.
using Rat = mpq_class;

/// Parses "p/q", an integer, or an exact decimal ("-1.25", "3e-2").
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(std::string_view text);

/// "p/q", or plain "p" for integral values.
std::string format_rational(const Rat& value);

double to_double(const Rat& value);

/// base^t with the convention 0^0 == 1.
Rat rat_pow(const Rat& base, unsigned long exponent);

Rat rat_abs(const Rat& value);

}  // namespace rdisc
