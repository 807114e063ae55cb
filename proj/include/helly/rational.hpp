#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace helly {

/// Exact rational scalar. GMP keeps the value canonical after every operation.
using Rat = mpq_class;

/// Parses "12", "-3", "0.25", "-1.5" or "3/2" into an exact rational.
/// Exponents, "inf", "nan" and anything else throw std::invalid_argument.
Rat parse_rat(std::string_view text);

/// Canonical text: "3" for integers, "3/2" otherwise.
std::string to_string(const Rat& value);

/// Advisory decimal approximation ("1.5", "0.3333333333").
std::string to_decimal(const Rat& value);

Rat pow(const Rat& base, unsigned exponent);

}  // namespace helly
