#ifndef LISSAJOUS_RATIONAL_HPP
#define LISSAJOUS_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lissajous {

// Canonical arbitrary-size fraction (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational parseRational(const std::string& text);
std::string toString(const Rational& q);

inline Rational frac(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline bool isInteger(const Rational& q) { return q.get_den() == 1; }

// throws DomainError unless q is an integer that fits in a long
long toLong(const Rational& q);

// exact square root when q is the square of a rational
std::optional<Rational> exactSqrt(const Rational& q);

Rational power(const Rational& base, unsigned long exponent);

template <class T>
T rising(const T& a, int k)
{
    T r(1);
    for (int i = 0; i < k; ++i)
        r *= a + T(i);
    return r;
}

template <class T>
T falling(const T& a, int k)
{
    T r(1);
    for (int i = 0; i < k; ++i)
        r *= a - T(i);
    return r;
}

template <class T>
T factorialRatio(int top, int bottom)
{
    // top! / bottom!
    T r(1);
    if (top >= bottom) {
        for (int i = bottom + 1; i <= top; ++i)
            r *= T(i);
    } else {
        for (int i = top + 1; i <= bottom; ++i)
            r /= T(i);
    }
    return r;
}

// Gamma(a + k) / Gamma(a) for integer k of either sign
template <class T>
T gammaShift(const T& a, int k)
{
    if (k >= 0)
        return rising<T>(a, k);
    return T(1) / rising<T>(a + T(k), -k);
}

} // namespace lissajous

#endif
