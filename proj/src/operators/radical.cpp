#include "lissajous/radical.hpp"

namespace lissajous {

std::optional<RadicalScalar> add(const RadicalScalar& a, const RadicalScalar& b)
{
    if (a.isZero())
        return b;
    if (b.isZero())
        return a;
    auto q = exactSqrt(b.radicand / a.radicand);
    if (!q)
        return std::nullopt;
    // a + b = (sa + sb q) sqrt(ra)
    Rational factor = a.sign + b.sign * *q;
    return factor * RadicalScalar(1, a.radicand);
}

std::string toString(const RadicalScalar& r)
{
    if (r.isZero())
        return "0";
    return std::string(r.sign > 0 ? "+" : "-") + "sqrt(" + toString(r.radicand) + ")";
}

std::string toString(const RadicalScalarT<Real>& r)
{
    if (r.isZero())
        return "0";
    return std::string(r.sign > 0 ? "+" : "-") + "sqrt(" + toString(r.radicand, 30) + ")";
}

} // namespace lissajous
