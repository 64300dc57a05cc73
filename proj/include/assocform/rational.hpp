#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace assocform {

// Exact arbitrary-precision rationals and integers. Every computation in the
// library is exact; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

Int factorial(int k);
Int binomial(int a, int b);

// Parses "p" or "p/q" with optional sign; canonicalizes. Throws ParseError on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

// Canonical "p" / "p/q" with the sign on the numerator.
std::string rat_to_string(const Rat& value);

// Rescales a vector of rationals to a primitive integer vector (cleared
// denominators, coprime numerators). Sign is untouched; the zero vector maps
// to itself. Returns the applied multiplier (primitive = multiplier * input).
Rat make_primitive(std::vector<Rat>& values);

}  // namespace assocform
