#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gsod {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "3", "-7/2", "0". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

} // namespace gsod
