#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bstab {

using Rational = mpq_class;
using RationalVec = std::vector<Rational>;

/// num/den in canonical form (the two-argument mpq_class constructor does not reduce).
Rational ratio(long num, long den);

/// Exact conversion of a finite binary64 value.
Rational from_double(double x);

/// Parses "p", "p/q", or a decimal literal such as "-1.25" or "3e-2".
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" string.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational factorial(unsigned k);

/// Rational with |error| <= 2^-bits relative, cheaper to carry through determinants.
Rational rounded(const Rational& q, unsigned bits = 64);

}  // namespace bstab
