#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace prophom {

/// Exact rational scalar; every coefficient in the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den < 0 ? -den : den);
    if (den < 0)
        r = -r;
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text)
{
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

/// Domain error raised by the algebra and verification layers.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

}  // namespace prophom
