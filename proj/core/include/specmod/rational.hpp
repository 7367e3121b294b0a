#ifndef SPECMOD_RATIONAL_HPP
#define SPECMOD_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>

namespace specmod {

/// Exact rational scalar used for all q-series coefficients.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& x)
{
    return x.template convert_to<double>();
}

/// x^n for integer n (n may be negative; x != 0 then).
inline Rational rational_pow(Rational x, long n)
{
    if (n < 0) {
        if (x == 0) {
            throw std::domain_error("rational_pow: zero base with negative exponent");
        }
        x = Rational(denominator(x), numerator(x));
        n = -n;
    }
    Rational r = 1;
    while (n > 0) {
        if (n & 1) {
            r *= x;
        }
        x *= x;
        n >>= 1;
    }
    return r;
}

} // namespace specmod

#endif
