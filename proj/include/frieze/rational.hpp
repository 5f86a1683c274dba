#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "frieze/errors.hpp"

namespace frieze {

// Exact arbitrary-precision rational, always canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.  mpq_class maintains this through arithmetic; only
// raw construction needs an explicit canonicalize.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p" and "p/q" with optional sign on p.
Rational rational_from_string(const std::string& text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

// q^e with e any integer; e < 0 inverts and requires q != 0.
Rational rational_pow(const Rational& base, long exp);

// Combined bit length of numerator and denominator; used for orbit budgets.
std::size_t rational_bits(const Rational& q);

}  // namespace frieze
