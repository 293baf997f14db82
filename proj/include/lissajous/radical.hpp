#ifndef LISSAJOUS_RADICAL_HPP
#define LISSAJOUS_RADICAL_HPP

#include "lissajous/errors.hpp"
#include "lissajous/rational.hpp"
#include "lissajous/real.hpp"

#include <optional>
#include <string>

namespace lissajous {

// sign * sqrt(radicand), radicand >= 0; sign is 0 exactly when the value is 0.
template <class T>
struct RadicalScalarT {
    int sign = 0;
    T radicand = T(0);

    RadicalScalarT() = default;
    RadicalScalarT(int s, T r) : sign(s), radicand(std::move(r))
    {
        if (radicand < 0)
            throw DomainError("negative radicand");
        if (sign == 0 || radicand == 0) {
            sign = 0;
            radicand = T(0);
        }
        sign = sign > 0 ? 1 : (sign < 0 ? -1 : 0);
    }

    // the radical with the given signed value
    static RadicalScalarT fromValue(const T& v)
    {
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        return RadicalScalarT(s, T(v * v));
    }

    // the signed square sign * radicand
    T signedSquare() const { return sign < 0 ? T(-radicand) : radicand; }
    bool isZero() const { return sign == 0; }

    RadicalScalarT operator-() const { return RadicalScalarT(-sign, radicand); }
    friend RadicalScalarT operator*(const RadicalScalarT& a, const RadicalScalarT& b)
    {
        return RadicalScalarT(a.sign * b.sign, T(a.radicand * b.radicand));
    }
    friend RadicalScalarT operator*(const T& q, const RadicalScalarT& a)
    {
        int s = q > 0 ? a.sign : (q < 0 ? -a.sign : 0);
        return RadicalScalarT(s, T(q * q * a.radicand));
    }
    friend bool operator==(const RadicalScalarT& a, const RadicalScalarT& b)
    {
        return a.sign == b.sign && a.radicand == b.radicand;
    }
};

using RadicalScalar = RadicalScalarT<Rational>;

// a + b when b/a is the square of a rational (zero operands always combine)
std::optional<RadicalScalar> add(const RadicalScalar& a, const RadicalScalar& b);

std::string toString(const RadicalScalar& r);
std::string toString(const RadicalScalarT<Real>& r);

} // namespace lissajous

#endif
