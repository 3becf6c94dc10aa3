#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ggc {

// exact rational, always canonical (mpq_class keeps gcd = 1, den > 0)
using Rational = mpq_class;

std::string to_string(const Rational& q);

// accepts "p", "-p", "p/q"; throws ParseError
Rational parse_rational(std::string_view s);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// canonical p/q (the two-argument mpq constructor does not reduce)
inline Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational factorial(unsigned k);
Rational binomial(unsigned n, unsigned k);

} // namespace ggc
