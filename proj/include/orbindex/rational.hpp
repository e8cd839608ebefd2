#pragma once

#include <gmpxx.h>

#include <string>

namespace orbindex {

/// Exact rational scalar. All lattice and root-system arithmetic in this
/// project is done over Rat; doubles appear only at final evaluation.
using Rat = mpq_class;

/// Parse "p/q" or "p" (optional sign, decimal digits). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& s);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string rational_string(const Rat& r);

bool is_integer(const Rat& r);

/// Exact conversion of an integer rational to long. Throws InternalError if
/// the value is not an integer or does not fit.
long to_long(const Rat& r);

double to_double(const Rat& r);

/// r - floor(r), in [0, 1).
Rat frac_part(const Rat& r);

/// Exact binomial coefficient.
Rat binomial(unsigned long n, unsigned long k);

/// -1, 0 or +1.
int sign_of(const Rat& r);

}  // namespace orbindex
