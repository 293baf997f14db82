#ifndef LISSAJOUS_CLOSED_FORMS_HPP
#define LISSAJOUS_CLOSED_FORMS_HPP

#include "lissajous/errors.hpp"
#include "lissajous/model.hpp"

#include <optional>

namespace lissajous {

// Squared action coefficients in the normalized basis, and the eigenvalues of
// the products X+X- and X-X+. Each returns nullopt when the expression is
// undefined (a vanishing denominator).
namespace closed {

template <class T>
T pow2(int e)
{
    T r(1);
    for (int i = 0; i < e; ++i)
        r *= T(2);
    return r;
}

// A+_K Theta^{K-1}_mu -> Theta^K_{mu-1}
template <class T>
T shiftRaise(const T& K, int mu)
{
    return T(mu) * (T(mu) + T(2) * K - T(1));
}

// A-_K Theta^K_mu -> Theta^{K-1}_{mu+1}
template <class T>
T shiftLower(const T& K, int mu)
{
    return T(mu + 1) * (T(mu) + T(2) * K);
}

// Phi_nu -> Phi_{nu+1}
template <class T>
std::optional<T> ladderRaise(const ModelParamsT<T>& p, int nu)
{
    const T& a = p.alpha;
    const T& b = p.beta;
    T v(nu);
    switch (p.variant) {
    case Variant::OneParam: {
        T l = lambda(p);
        return (v + T(1)) * (v + l) * (v + T(2) * l) / (v + l + T(1));
    }
    case Variant::TwoParam:
        return T(16) * (a + b + T(1) + T(2) * v) * (v + T(1)) * (a + b + T(1) + v) * (a + T(1) + v) *
               (b + T(1) + v) / (a + b + T(3) + T(2) * v);
    case Variant::ExtTwoParam: {
        T m1(p.m1);
        return T(256) * (a + v - m1 + T(1)) * (a + v - m1 + T(2)) * (b + v + m1) * (b + v + m1 + T(1)) *
               (a + b + T(1) + T(2) * v) * (v + T(1)) * (a + b + T(1) + v) * (a + T(2) + v) * (b + v) /
               (a + b + T(3) + T(2) * v);
    }
    }
    return std::nullopt;
}

// Phi_nu -> Phi_{nu-1}
template <class T>
std::optional<T> ladderLower(const ModelParamsT<T>& p, int nu)
{
    const T& a = p.alpha;
    const T& b = p.beta;
    T v(nu);
    if (nu == 0)
        return T(0);
    switch (p.variant) {
    case Variant::OneParam: {
        // B-_{nu-1} Phi_nu
        T l = lambda(p);
        return v * (v + l) * (v - T(1) + T(2) * l) / (v + l - T(1));
    }
    case Variant::TwoParam: {
        T den = a + b - T(1) + T(2) * v;
        if (den == 0)
            return std::nullopt;
        return T(16) * (a + b + T(1) + T(2) * v) * v * (a + b + v) * (a + v) * (b + v) / den;
    }
    case Variant::ExtTwoParam: {
        T m1(p.m1);
        T den = a + b - T(1) + T(2) * v;
        if (den == 0)
            return std::nullopt;
        return T(256) * (a + v - m1 + T(1)) * (a + v - m1) * (b + v + m1) * (b + v + m1 - T(1)) *
               (a + b + T(1) + T(2) * v) * v * (a + b + v) * (a + v + T(1)) * (b + v - T(1)) / den;
    }
    }
    return std::nullopt;
}

// X+ on Psi_{mu,nu} -> Psi_{mu - mt, nu + n}
template <class T>
std::optional<T> xRaise(const ModelParamsT<T>& p, const StateIndex& s)
{
    const T& a = p.alpha;
    const T& b = p.beta;
    int n = p.n;
    int mt = thetaStep(p);
    T v(s.nu);
    T K = thetaK(p, s.nu);
    T theta = falling<T>(T(s.mu), mt) * rising<T>(T(s.mu) + T(2) * K + T(1), mt);
    switch (p.variant) {
    case Variant::OneParam: {
        T l = lambda(p);
        return (l + v) / (l + v + T(n)) * rising<T>(v + T(1), n) * rising<T>(T(2) * l + v, n) * theta;
    }
    case Variant::TwoParam:
        return pow2<T>(4 * n) * (a + b + T(1) + T(2) * v) / (a + b + T(1) + T(2) * v + T(2 * n)) *
               rising<T>(v + T(1), n) * rising<T>(a + b + v + T(1), n) * rising<T>(a + v + T(1), n) *
               rising<T>(b + v + T(1), n) * theta;
    case Variant::ExtTwoParam: {
        T m1(p.m1);
        T pre = pow2<T>(4 * n) * rising<T>(a + v - m1 + T(2), n - 1) * rising<T>(b + v + m1 + T(1), n - 1);
        return pre * pre * (a + v - m1 + T(1)) * (a + v - m1 + T(n + 1)) * (b + v + m1) * (b + v + m1 + T(n)) *
               (a + b + T(1) + T(2) * v) / (a + b + T(1) + T(2) * v + T(2 * n)) * rising<T>(v + T(1), n) *
               rising<T>(a + b + v + T(1), n) * rising<T>(a + v + T(2), n) * rising<T>(b + v, n) * theta;
    }
    }
    return std::nullopt;
}

// X- on Psi_{mu,nu} -> Psi_{mu + mt, nu - n}
template <class T>
std::optional<T> xLower(const ModelParamsT<T>& p, const StateIndex& s)
{
    const T& a = p.alpha;
    const T& b = p.beta;
    int n = p.n;
    int mt = thetaStep(p);
    if (s.nu < n)
        return T(0);
    T v(s.nu);
    T K = thetaK(p, s.nu);
    T theta = rising<T>(T(s.mu + 1), mt) * falling<T>(T(s.mu) + T(2) * K, mt);
    switch (p.variant) {
    case Variant::OneParam: {
        T l = lambda(p);
        return (l + v) / (l + v - T(n)) * falling<T>(v, n) * falling<T>(T(2) * l + v - T(1), n) * theta;
    }
    case Variant::TwoParam: {
        T den = a + b + T(1) + T(2) * v - T(2 * n);
        if (den == 0)
            return std::nullopt;
        return pow2<T>(4 * n) * (a + b + T(1) + T(2) * v) / den * falling<T>(v, n) * falling<T>(a + b + v, n) *
               falling<T>(a + v, n) * falling<T>(b + v, n) * theta;
    }
    case Variant::ExtTwoParam: {
        T m1(p.m1);
        T den = a + b + T(1) + T(2) * v - T(2 * n);
        if (den == 0)
            return std::nullopt;
        T pre = pow2<T>(4 * n) * falling<T>(a + v - m1, n - 1) * falling<T>(b + v + m1 - T(1), n - 1);
        return pre * pre * (a + v - m1 + T(1)) * (a + v - m1 - T(n - 1)) * (b + v + m1) * (b + v + m1 - T(n)) *
               (a + b + T(1) + T(2) * v) / den * falling<T>(v, n) * falling<T>(a + b + v, n) *
               falling<T>(a + v + T(1), n) * falling<T>(b + v - T(1), n) * theta;
    }
    }
    return std::nullopt;
}

// eigenvalue of X+_{mu+mt,nu-n} X-_{mu,nu} on Psi_{mu,nu}
template <class T>
T productRaiseLower(const ModelParamsT<T>& p, const StateIndex& s)
{
    const T& a = p.alpha;
    const T& b = p.beta;
    int n = p.n;
    int mt = thetaStep(p);
    T v(s.nu);
    T K = thetaK(p, s.nu);
    T theta = rising<T>(T(s.mu + 1), mt) * falling<T>(T(s.mu) + T(2) * K, mt);
    switch (p.variant) {
    case Variant::OneParam:
        return falling<T>(v, n) * falling<T>(T(2) * lambda(p) + v - T(1), n) * theta;
    case Variant::TwoParam:
        return pow2<T>(4 * n) * falling<T>(v, n) * falling<T>(a + b + v, n) * falling<T>(a + v, n) *
               falling<T>(b + v, n) * theta;
    case Variant::ExtTwoParam: {
        T m1(p.m1);
        return pow2<T>(8 * n) * falling<T>(a + v - m1, n) * falling<T>(a + v - m1 + T(1), n) *
               falling<T>(b + v + m1 - T(1), n) * falling<T>(b + v + m1, n) * falling<T>(v, n) *
               falling<T>(a + b + v, n) * falling<T>(a + v + T(1), n) * falling<T>(b + v - T(1), n) * theta;
    }
    }
    return T(0);
}

// eigenvalue of X-_{mu-mt,nu+n} X+_{mu,nu} on Psi_{mu,nu}
template <class T>
T productLowerRaise(const ModelParamsT<T>& p, const StateIndex& s)
{
    const T& a = p.alpha;
    const T& b = p.beta;
    int n = p.n;
    int mt = thetaStep(p);
    T v(s.nu);
    T K = thetaK(p, s.nu);
    T theta = falling<T>(T(s.mu), mt) * rising<T>(T(s.mu) + T(2) * K + T(1), mt);
    switch (p.variant) {
    case Variant::OneParam:
        return rising<T>(v + T(1), n) * rising<T>(T(2) * lambda(p) + v, n) * theta;
    case Variant::TwoParam:
        return pow2<T>(4 * n) * rising<T>(v + T(1), n) * rising<T>(a + b + v + T(1), n) *
               rising<T>(a + v + T(1), n) * rising<T>(b + v + T(1), n) * theta;
    case Variant::ExtTwoParam: {
        T m1(p.m1);
        return pow2<T>(8 * n) * rising<T>(a + v - m1 + T(1), n) * rising<T>(a + v - m1 + T(2), n) *
               rising<T>(b + v + m1, n) * rising<T>(b + v + m1 + T(1), n) * rising<T>(v + T(1), n) *
               rising<T>(a + b + v + T(1), n) * rising<T>(a + v + T(2), n) * rising<T>(b + v, n) * theta;
    }
    }
    return T(0);
}

// A^dagger Phi_nu = c f_nu for the extension, with f_nu the partner eigenfunction
template <class T>
T superchargeAdjointFactor(const ModelParamsT<T>& p, int nu)
{
    T m1(p.m1);
    return T(4) * (p.alpha + T(nu) - m1 + T(1)) * (p.beta + T(nu) + m1);
}

// the factorization energy of the seed
template <class T>
T seedEnergy(const ModelParamsT<T>& p)
{
    T e = p.alpha - p.beta - T(2 * p.m1) + T(1);
    return e * e;
}

} // namespace closed

} // namespace lissajous

#endif
