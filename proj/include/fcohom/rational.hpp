#pragma once

// Exact rational coefficients. GMP's mpq_class already maintains the
// canonical form we require (lowest terms, positive denominator, 0 == 0/1),
// so the library uses it directly as the coefficient field.

#include <gmpxx.h>

#include <string>

#include "fcohom/errors.hpp"

namespace fcohom {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal '" + text + "'", 0);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace fcohom
