#include "lissajous/model.hpp"

#include "lissajous/errors.hpp"

#include <numeric>
#include <sstream>

namespace lissajous {

std::string toString(Variant v)
{
    switch (v) {
    case Variant::OneParam:
        return "one-param";
    case Variant::TwoParam:
        return "two-param";
    case Variant::ExtTwoParam:
        return "ext-two-param";
    }
    return "?";
}

std::string shortName(Variant v)
{
    switch (v) {
    case Variant::OneParam:
        return "1P";
    case Variant::TwoParam:
        return "2P";
    case Variant::ExtTwoParam:
        return "E2";
    }
    return "?";
}

Variant parseVariant(const std::string& text)
{
    for (Variant v : {Variant::OneParam, Variant::TwoParam, Variant::ExtTwoParam})
        if (text == toString(v) || text == shortName(v))
            return v;
    throw ParseError("unknown variant '" + text + "' (expected one-param, two-param or ext-two-param)");
}

namespace {

template <class T>
void validateCommon(const ModelParamsT<T>& p, const std::string& alphaText, const std::string& betaText)
{
    if (p.m < 1 || p.n < 1)
        throw InvalidModel("m and n must be positive integers");
    if (std::gcd(p.m, p.n) != 1)
        throw InvalidModel("m and n must be coprime");
    if (p.alpha < 1)
        throw InvalidModel("alpha = " + alphaText + " must be at least 1");
    switch (p.variant) {
    case Variant::OneParam:
        if (p.beta != T(1) / T(2))
            throw InvalidModel("beta is fixed to 1/2 for the one-parameter model");
        break;
    case Variant::TwoParam:
        if (p.beta < 1)
            throw InvalidModel("beta = " + betaText + " must be at least 1");
        break;
    case Variant::ExtTwoParam:
        if (p.beta < 2)
            throw InvalidModel("beta = " + betaText + " must be at least 2 for the extended model");
        if (p.m1 < 1)
            throw InvalidModel("m1 must be a positive integer");
        if (!(p.alpha > T(p.m1 - 1)))
            throw InvalidModel("alpha must exceed m1 - 1");
        break;
    }
}

} // namespace

void validate(const ModelParams& p)
{
    validateCommon(p, toString(p.alpha), toString(p.beta));
}

void validate(const NumericParams& p)
{
    validateCommon(p, toString(p.alpha, 20), toString(p.beta, 20));
}

NumericParams toNumeric(const ModelParams& p)
{
    NumericParams r;
    r.variant = p.variant;
    r.m = p.m;
    r.n = p.n;
    r.alpha = toReal(p.alpha);
    r.beta = toReal(p.beta);
    r.m1 = p.m1;
    return r;
}

namespace {

template <class T, class Fmt>
std::string describeImpl(const ModelParamsT<T>& p, Fmt fmt)
{
    std::ostringstream os;
    os << shortName(p.variant) << "(m=" << p.m << ",n=" << p.n << ",alpha=" << fmt(p.alpha);
    if (p.variant != Variant::OneParam)
        os << ",beta=" << fmt(p.beta);
    if (p.variant == Variant::ExtTwoParam)
        os << ",m1=" << p.m1;
    os << ")";
    return os.str();
}

} // namespace

std::string describe(const ModelParams& p)
{
    return describeImpl(p, [](const Rational& q) { return toString(q); });
}

std::string describe(const NumericParams& p)
{
    return describeImpl(p, [](const Real& x) { return toString(x, 12); });
}

int integerValue(const Rational& q)
{
    if (!isInteger(q))
        throw DomainError(toString(q) + " is not an integer");
    return static_cast<int>(toLong(q));
}

int integerValue(const Real& x)
{
    Real r = round(x);
    if (abs(x - r) > Real("1e-20"))
        throw DomainError(toString(x, 20) + " is not an integer");
    return static_cast<int>(r);
}

std::string toString(const StateIndex& s)
{
    return "(" + std::to_string(s.mu) + "," + std::to_string(s.nu) + ")";
}

} // namespace lissajous
