#pragma once

#include <gmpxx.h>

#include <string>

namespace liegrad {

/// Exact rational scalar. Arithmetic never rounds; values are kept in
/// lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "n" or "n/d" with an optional leading minus sign.
/// Throws InputError on any other shape or on a zero denominator.
Rational parse_rational(const std::string& text);

/// Lowest-terms rendering, "n" or "n/d" with d > 1.
std::string format_rational(const Rational& value);

} // namespace liegrad
