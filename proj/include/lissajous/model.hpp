#ifndef LISSAJOUS_MODEL_HPP
#define LISSAJOUS_MODEL_HPP

#include "lissajous/rational.hpp"
#include "lissajous/real.hpp"

#include <compare>
#include <string>

namespace lissajous {

enum class Variant { OneParam, TwoParam, ExtTwoParam };

std::string toString(Variant v);
std::string shortName(Variant v);
Variant parseVariant(const std::string& text);

template <class T>
struct ModelParamsT {
    Variant variant = Variant::OneParam;
    int m = 1;
    int n = 1;
    T alpha = T(1);
    T beta = T(1) / T(2);
    int m1 = 0;
};

using ModelParams = ModelParamsT<Rational>;
using NumericParams = ModelParamsT<Real>;

// throws InvalidModel
void validate(const ModelParams& p);
void validate(const NumericParams& p);

NumericParams toNumeric(const ModelParams& p);

std::string describe(const ModelParams& p);
std::string describe(const NumericParams& p);

// the integer value of an exact or numerically integral scalar; throws DomainError otherwise
int integerValue(const Rational& q);
int integerValue(const Real& x);

struct StateIndex {
    int mu = 0;
    int nu = 0;
    auto operator<=>(const StateIndex&) const = default;
};

std::string toString(const StateIndex& s);

// Step of sqrt(H_phi) under X+ (n, or 2n for the two-parameter families).
template <class T>
int phiStep(const ModelParamsT<T>& p)
{
    return p.variant == Variant::OneParam ? p.n : 2 * p.n;
}

// Number of shift factors in X+ (m, or 2m).
template <class T>
int thetaStep(const ModelParamsT<T>& p)
{
    return p.variant == Variant::OneParam ? p.m : 2 * p.m;
}

// The sign relating X- to the decomposition X+ = O sqrt(H_phi) + E.
template <class T>
int twistSign(const ModelParamsT<T>& p)
{
    if (p.variant != Variant::OneParam)
        return 1;
    return (p.m + p.n) % 2 == 0 ? 1 : -1;
}

// eta^2 for the imaginary prefactor eta of the standard-form generators
template <class T>
int etaSquared(const ModelParamsT<T>& p)
{
    return -twistSign(p);
}

template <class T>
T lambda(const ModelParamsT<T>& p)
{
    return p.alpha + T(1) / T(2);
}

template <class T>
T epsilon(const ModelParamsT<T>& p, int nu)
{
    if (p.variant == Variant::OneParam)
        return lambda(p) + T(nu);
    return p.alpha + p.beta + T(1) + T(2 * nu);
}

template <class T>
T kappa(const ModelParamsT<T>& p)
{
    return T(p.m) / T(p.n);
}

template <class T>
T thetaK(const ModelParamsT<T>& p, int nu)
{
    return kappa(p) * epsilon(p, nu);
}

template <class T>
T energy(const ModelParamsT<T>& p, const StateIndex& s)
{
    T x = thetaK(p, s.nu) + T(s.mu);
    return x * (x + T(1));
}

// N^2(K + dK, mu + dmu) / N^2(K, mu) for the theta normalization; dK must be an integer.
template <class T>
T thetaNormSqRatio(const T& K, int mu, int dK, int dmu)
{
    T four(1);
    for (int i = 0; i < (dK >= 0 ? dK : -dK); ++i)
        four *= T(4);
    if (dK < 0)
        four = T(1) / four;
    T half = T(1) / T(2);
    T g = gammaShift<T>(K + half, dK);
    T r = four * g * g * factorialRatio<T>(mu + dmu, mu);
    r *= (T(mu + dmu) + K + T(dK) + half) / (T(mu) + K + half);
    r /= gammaShift<T>(T(mu) + T(2) * K + T(1), dmu + 2 * dK);
    return r;
}

// N_nu^2 / N_0^2 for the phi normalization
template <class T>
T phiNormSq(const ModelParamsT<T>& p, int nu)
{
    const T& a = p.alpha;
    const T& b = p.beta;
    T one(1);
    switch (p.variant) {
    case Variant::OneParam: {
        T l = lambda(p);
        return factorialRatio<T>(nu, 0) * (T(nu) + l) / (l * rising<T>(T(2) * l, nu));
    }
    case Variant::TwoParam:
        return (a + b + one + T(2 * nu)) / (a + b + one) * factorialRatio<T>(nu, 0) *
               rising<T>(a + b + one, nu) / (rising<T>(a + one, nu) * rising<T>(b + one, nu));
    case Variant::ExtTwoParam: {
        T m1(p.m1);
        T base = (a - m1 + one) * (b + m1);
        T here = (a + T(nu) - m1 + one) * (b + T(nu) + m1);
        return (a + b + one + T(2 * nu)) / (a + b + one) * factorialRatio<T>(nu, 0) *
               rising<T>(a + b + one, nu) * base / (here * rising<T>(a + T(2), nu) * rising<T>(b, nu));
    }
    }
    return one;
}

inline int thetaNormSign(int mu)
{
    return mu % 2 == 0 ? 1 : -1;
}

template <class T>
int phiNormSign(const ModelParamsT<T>& p, int nu)
{
    if (p.variant == Variant::OneParam)
        return 1;
    return nu % 2 == 0 ? 1 : -1;
}

} // namespace lissajous

#endif
