#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cremona {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" or "p"; the lossless encoding used by the JSON reports.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q"; throws Error(SyntaxError) otherwise.
Rational parse_rational(std::string_view text);

// Exact test for q = r^2 with r rational; returns r >= 0 when it exists.
bool rational_sqrt(const Rational& q, Rational& root);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace cremona
