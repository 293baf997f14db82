#ifndef LISSAJOUS_STRUCTURE_HPP
#define LISSAJOUS_STRUCTURE_HPP

#include "lissajous/bivar.hpp"
#include "lissajous/model.hpp"

namespace lissajous {

namespace detail {

// a*y + b as a polynomial in (x, y)
template <class T>
BivarPoly<T> linearY(const T& a, const T& b)
{
    return BivarPoly<T>::monomial(a, 0, 1) + BivarPoly<T>(b);
}

// x - (u)(u + 1) with u = a*y + b
template <class T>
BivarPoly<T> energyFactor(const T& a, const T& b)
{
    return BivarPoly<T>::x() - linearY(a, b) * linearY(a, T(b + T(1)));
}

// (a*y + b)(a*y + c) - d
template <class T>
BivarPoly<T> pairFactor(const T& a, const T& b, const T& c, const T& d)
{
    return linearY(a, b) * linearY(a, c) - BivarPoly<T>(d);
}

} // namespace detail

// X+X- (sign = -1) or X-X+ (sign = +1) as a polynomial in (H, t) with t = sqrt(H_phi).
template <class T>
BivarPoly<T> productPolynomial(const ModelParamsT<T>& p, int sign)
{
    using detail::energyFactor;
    using detail::pairFactor;
    const T& a = p.alpha;
    const T& b = p.beta;
    T k = kappa(p);
    T s(sign);
    BivarPoly<T> r(T(1));
    const T one(1);
    if (p.variant == Variant::OneParam) {
        T c = a * a - T(1) / T(4);
        for (int i = 1; i <= p.n; ++i) {
            T ri(i);
            // (t -/+ r)(t -/+ r +/- 1) with the lower sign for X-X+
            r = r * pairFactor(one, T(s * ri), T(s * ri - s), c);
        }
        for (int i = 1; i <= p.m; ++i) {
            T pi(i);
            if (sign < 0)
                r = r * energyFactor(k, T(-pi));
            else
                r = r * (BivarPoly<T>::x() - detail::linearY(k, pi) * detail::linearY(k, T(pi - one)));
        }
        return r;
    }
    T plus = (a + b + one) * (a + b - one);
    T minus = p.variant == Variant::TwoParam ? T((a - b + one) * (a - b - one)) : T((a - b + T(3)) * (a - b + one));
    for (int i = 1; i <= p.n; ++i) {
        T two_r(2 * i);
        r = r * pairFactor(one, T(s * two_r), T(s * two_r - T(2) * s), plus);
        r = r * pairFactor(one, T(s * two_r), T(s * two_r - T(2) * s), minus);
    }
    if (p.variant == Variant::ExtTwoParam) {
        T d = a - b - T(2 * p.m1);
        T c = d * (d + T(2));
        for (int i = 1; i <= p.n; ++i) {
            T q(2 * i);
            r = r * pairFactor(one, T(s * q + s), T(s * q - s), c);
            r = r * pairFactor(one, T(s * q - s), T(s * q - T(3) * s), c);
        }
    }
    for (int i = 1; i <= 2 * p.m; ++i) {
        T pi(i);
        if (sign < 0)
            r = r * energyFactor(k, T(-pi));
        else
            r = r * (BivarPoly<T>::x() - detail::linearY(k, pi) * detail::linearY(k, T(pi - one)));
    }
    return r;
}

// Structure function Phi(N, H, u) as a polynomial in (H, z) with z = N + u.
template <class T>
BivarPoly<T> structurePolynomial(const ModelParamsT<T>& p)
{
    using detail::energyFactor;
    using detail::pairFactor;
    const T& a = p.alpha;
    const T& b = p.beta;
    const T one(1);
    BivarPoly<T> r(T(1));
    if (p.variant == Variant::OneParam) {
        T m(p.m), n(p.n);
        for (int i = 1; i <= p.m; ++i)
            r = r * energyFactor(m, T(-i));
        T c = a * a - T(1) / T(4);
        for (int i = 1; i <= p.n; ++i)
            r = r * pairFactor(n, T(-i), T(-i + 1), c);
        return r;
    }
    T m2(2 * p.m), n2(2 * p.n);
    for (int i = 1; i <= 2 * p.m; ++i)
        r = r * energyFactor(m2, T(-i));
    if (p.variant == Variant::ExtTwoParam) {
        T d = a - b - T(2 * p.m1);
        T c = d * (d + T(2));
        for (int q = 1; q <= p.n; ++q)
            r = r * pairFactor(n2, T(-2 * q - 1), T(-2 * q + 1), c);
        for (int q = 1; q <= p.n; ++q)
            r = r * pairFactor(n2, T(-2 * q + 1), T(-2 * q + 3), c);
    }
    T plus = (a + b + one) * (a + b - one);
    T minus = p.variant == Variant::TwoParam ? T((a - b + one) * (a - b - one)) : T((a - b + T(3)) * (a - b + one));
    for (int i = 1; i <= p.n; ++i)
        r = r * pairFactor(n2, T(-2 * i), T(-2 * i + 2), plus);
    for (int i = 1; i <= p.n; ++i)
        r = r * pairFactor(n2, T(-2 * i), T(-2 * i + 2), minus);
    return r;
}

} // namespace lissajous

#endif
