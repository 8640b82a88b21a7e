#pragma once

#include <gmpxx.h>

#include <string>

namespace aggtree {

// Exact rational arithmetic for every cost, time and budget in the project.
// Values coming out of parse_rational (and all GMP arithmetic) are in lowest
// terms with a positive denominator, so equal values compare and print
// identically.
using Rat = mpq_class;

// Accepts "p", "p/q" and decimal forms like "1.25" or "-0.5". Exact; no
// floating point is involved. Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

// Lowest-terms "p/q", or plain "p" when the denominator is 1.
std::string rational_str(const Rat& value);

// Lossy conversion for report columns.
double rational_double(const Rat& value);

}  // namespace aggtree
