#pragma once

#include <gmpxx.h>

#include <string>

namespace ttp {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Renders a rational for text formats: exact integer when possible,
/// otherwise a decimal approximation with enough digits for any solver.
std::string rational_to_text(const Rational& q);

/// Rounds half away from zero to one decimal, e.g. 31.25 -> "31.3".
std::string percent_to_text(double percent);

}  // namespace ttp
