#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hodge {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

} // namespace hodge
