#include "lissajous/trig_function.hpp"

#include "lissajous/errors.hpp"

#include <sstream>

namespace lissajous {

namespace {

const CPoly& oneMinusCSquared()
{
    static const CPoly p(std::vector<Rational>{1, 0, -1});
    return p;
}

CPoly linear(const Rational& c0, const Rational& c1)
{
    return CPoly(std::vector<Rational>{c0, c1});
}

void requireSameVariable(const QuasiTrigFunction& f, const QuasiTrigFunction& g)
{
    if (f.variable() != g.variable())
        throw IncompatibleVariables("functions of " + toString(f.variable()) + " and " +
                                    toString(g.variable()) + " cannot be combined");
}

std::string exponentText(const Rational& q)
{
    return q.get_str();
}

// s^k * N for integer k >= 0
TrigPoly timesSinPower(TrigPoly n, long k)
{
    for (long i = 0; i < k; ++i)
        n = n.timesSin();
    return n;
}

TrigPoly timesCosPower(const TrigPoly& n, long k)
{
    return {n.even.shifted(static_cast<int>(k)), n.odd.shifted(static_cast<int>(k))};
}

} // namespace

std::string toString(Variable v)
{
    return v == Variable::Theta ? "theta" : "phi";
}

TrigPoly TrigPoly::timesSin() const
{
    return {oneMinusCSquared() * odd, even};
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b)
{
    CPoly e = a.even * b.even;
    if (!a.odd.isZero() && !b.odd.isZero())
        e += oneMinusCSquared() * (a.odd * b.odd);
    return {std::move(e), a.even * b.odd + a.odd * b.even};
}

TrigPoly TrigPoly::derivative() const
{
    // d/dx p0(c) = -s p0'(c);  d/dx s p1(c) = c p1 - s^2 p1'(c)
    CPoly e = odd.shifted(1) - oneMinusCSquared() * odd.derivative();
    return {std::move(e), -even.derivative()};
}

std::string TrigPoly::toString() const
{
    if (isZero())
        return "0";
    if (odd.isZero())
        return even.toString("c");
    std::string s = "s*(" + odd.toString("c") + ")";
    if (even.isZero())
        return s;
    return even.toString("c") + " + " + s;
}

QuasiTrigFunction QuasiTrigFunction::constant(Variable v, const Rational& value)
{
    QuasiTrigFunction f(v);
    f.num_ = TrigPoly(CPoly(value));
    return f;
}

QuasiTrigFunction QuasiTrigFunction::monomial(Variable v, const Rational& sinExp, const Rational& cosExp,
                                              const Rational& coefficient)
{
    QuasiTrigFunction f(v);
    if (coefficient == 0)
        return f;
    f.a_ = sinExp;
    f.b_ = cosExp;
    f.num_ = TrigPoly(CPoly(coefficient));
    return f;
}

QuasiTrigFunction QuasiTrigFunction::fromCos(Variable v, const CPoly& p)
{
    return fromParts(v, 0, 0, TrigPoly(p), TrigPoly(CPoly(Rational(1))));
}

QuasiTrigFunction QuasiTrigFunction::fromSin(Variable v, const CPoly& p)
{
    // s^k = s^(k mod 2) (1 - c^2)^(k div 2)
    CPoly even, odd;
    CPoly power(Rational(1));
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0 && k % 2 == 0)
            power = power * oneMinusCSquared();
        if (p[k] == 0)
            continue;
        if (k % 2 == 0)
            even += p[k] * power;
        else
            odd += p[k] * power;
    }
    return fromParts(v, 0, 0, TrigPoly(even, odd), TrigPoly(CPoly(Rational(1))));
}

QuasiTrigFunction QuasiTrigFunction::fromParts(Variable v, const Rational& sinExp, const Rational& cosExp,
                                               TrigPoly numerator, TrigPoly denominator)
{
    if (denominator.isZero())
        throw ZeroDenominator("quasi-trigonometric function with zero denominator");
    QuasiTrigFunction f(v);
    f.a_ = sinExp;
    f.b_ = cosExp;
    if (!denominator.odd.isZero()) {
        numerator = numerator * denominator.conjugate();
        denominator = denominator * denominator.conjugate();
    }
    f.num_ = std::move(numerator);
    f.den_ = std::move(denominator.even);
    f.canonicalize();
    return f;
}

void QuasiTrigFunction::canonicalize()
{
    if (num_.isZero()) {
        a_ = 0;
        b_ = 0;
        den_ = CPoly(Rational(1));
        return;
    }
    if (den_.isZero())
        throw ZeroDenominator("quasi-trigonometric function with zero denominator");

    const CPoly oneMinusC = linear(1, -1);
    const CPoly onePlusC = linear(1, 1);
    bool changed = true;
    while (changed) {
        changed = false;

        if (den_.degree() > 0) {
            CPoly g = gcd(gcd(num_.even, num_.odd), den_);
            if (g.degree() > 0) {
                num_.even = num_.even.divmod(g).first;
                num_.odd = num_.odd.divmod(g).first;
                den_ = den_.divmod(g).first;
                changed = true;
            }
        }

        while (num_.even[0] == 0 && num_.odd[0] == 0) {
            num_.even = num_.even.divmod(CPoly::x()).first;
            num_.odd = num_.odd.divmod(CPoly::x()).first;
            b_ += 1;
        }
        while (den_[0] == 0) {
            den_ = den_.divmod(CPoly::x()).first;
            b_ -= 1;
        }

        // 1/(1 -+ c) = (1 +- c)/s^2
        while (den_.degree() > 0 && den_(Rational(1)) == 0) {
            den_ = den_.divmod(oneMinusC).first;
            num_ = onePlusC * num_;
            a_ -= 2;
            changed = true;
        }
        while (den_.degree() > 0 && den_(Rational(-1)) == 0) {
            den_ = den_.divmod(onePlusC).first;
            num_ = oneMinusC * num_;
            a_ -= 2;
            changed = true;
        }

        // s | N  iff  (1 - c^2) | p0, then N/s = p1 + s p0/(1 - c^2)
        while (num_.even(Rational(1)) == 0 && num_.even(Rational(-1)) == 0) {
            CPoly q = num_.even.divmod(oneMinusCSquared()).first;
            num_.even = std::move(num_.odd);
            num_.odd = std::move(q);
            a_ += 1;
            changed = true;
        }
    }

    Rational lead = den_.leading();
    if (lead != 1) {
        num_.even = num_.even / lead;
        num_.odd = num_.odd / lead;
        den_ = den_ / lead;
    }
}

std::optional<Rational> QuasiTrigFunction::constantValue() const
{
    if (isZero())
        return Rational(0);
    if (a_ == 0 && b_ == 0 && num_.odd.isZero() && num_.even.isConstant() && den_.isConstant())
        return num_.even[0] / den_[0];
    return std::nullopt;
}

QuasiTrigFunction QuasiTrigFunction::operator-() const
{
    QuasiTrigFunction r = *this;
    r.num_ = TrigPoly(-num_.even, -num_.odd);
    return r;
}

QuasiTrigFunction operator+(const QuasiTrigFunction& f, const QuasiTrigFunction& g)
{
    requireSameVariable(f, g);
    if (f.isZero())
        return g;
    if (g.isZero())
        return f;
    Rational da = f.a_ - g.a_;
    Rational db = f.b_ - g.b_;
    if (!isInteger(da) || !isInteger(db))
        throw IncompatibleExponents("exponents (" + f.a_.get_str() + ", " + f.b_.get_str() + ") and (" +
                                    g.a_.get_str() + ", " + g.b_.get_str() + ") differ by non-integers");
    Rational amin = da < 0 ? f.a_ : g.a_;
    Rational bmin = db < 0 ? f.b_ : g.b_;
    TrigPoly nf = timesCosPower(timesSinPower(f.num_, toLong(f.a_ - amin)), toLong(f.b_ - bmin));
    TrigPoly ng = timesCosPower(timesSinPower(g.num_, toLong(g.a_ - amin)), toLong(g.b_ - bmin));

    QuasiTrigFunction r(f.var_);
    r.a_ = amin;
    r.b_ = bmin;
    if (f.den_ == g.den_) {
        r.num_ = nf + ng;
        r.den_ = f.den_;
    } else {
        r.num_ = g.den_ * nf + f.den_ * ng;
        r.den_ = f.den_ * g.den_;
    }
    r.canonicalize();
    return r;
}

QuasiTrigFunction operator-(const QuasiTrigFunction& f, const QuasiTrigFunction& g)
{
    return f + (-g);
}

QuasiTrigFunction operator*(const QuasiTrigFunction& f, const QuasiTrigFunction& g)
{
    requireSameVariable(f, g);
    QuasiTrigFunction r(f.var_);
    if (f.isZero() || g.isZero())
        return r;
    r.a_ = f.a_ + g.a_;
    r.b_ = f.b_ + g.b_;
    r.num_ = f.num_ * g.num_;
    r.den_ = f.den_ * g.den_;
    r.canonicalize();
    return r;
}

QuasiTrigFunction operator*(const Rational& q, const QuasiTrigFunction& f)
{
    if (q == 0)
        return QuasiTrigFunction(f.var_);
    QuasiTrigFunction r = f;
    r.num_ = TrigPoly(q * f.num_.even, q * f.num_.odd);
    return r;
}

QuasiTrigFunction QuasiTrigFunction::reciprocal() const
{
    if (isZero())
        throw ZeroDenominator("reciprocal of the zero function");
    return fromParts(var_, -a_, -b_, TrigPoly(den_), num_);
}

QuasiTrigFunction operator/(const QuasiTrigFunction& f, const QuasiTrigFunction& g)
{
    requireSameVariable(f, g);
    return f * g.reciprocal();
}

bool operator==(const QuasiTrigFunction& f, const QuasiTrigFunction& g)
{
    if (f.var_ != g.var_)
        return false;
    if (f.isZero() || g.isZero())
        return f.isZero() && g.isZero();
    return f.a_ == g.a_ && f.b_ == g.b_ && f.num_ == g.num_ && f.den_ == g.den_;
}

QuasiTrigFunction QuasiTrigFunction::canonicalized() const
{
    QuasiTrigFunction r = *this;
    r.canonicalize();
    return r;
}

std::string QuasiTrigFunction::toString() const
{
    std::ostringstream os;
    os << "sin^{" << exponentText(a_) << "} cos^{" << exponentText(b_) << "} * (" << num_.toString() << ")/("
       << den_.toString("c") << ")";
    return os.str();
}

QuasiTrigFunction differentiate(const QuasiTrigFunction& f)
{
    if (f.isZero())
        return f;
    const Rational& a = f.sinExponent();
    const Rational& b = f.cosExponent();
    const TrigPoly& n = f.numerator();
    const CPoly& d = f.denominator();

    // (a c^2 - b s^2) = (a + b) c^2 - b
    CPoly weight(std::vector<Rational>{-b, 0, a + b});
    TrigPoly dn = n.derivative();
    TrigPoly cs = TrigPoly(CPoly(), CPoly::x()); // s*c

    if (d.isConstant()) {
        TrigPoly num = weight * n + cs * dn;
        return QuasiTrigFunction::fromParts(f.variable(), a - 1, b - 1, std::move(num), TrigPoly(d));
    }
    TrigPoly dd(CPoly(), -d.derivative()); // d/dx d(c) = -s d'(c)
    TrigPoly num = weight * (d * n) + cs * (d * dn - n * dd);
    return QuasiTrigFunction::fromParts(f.variable(), a - 1, b - 1, std::move(num), TrigPoly(d * d));
}

std::optional<Rational> tryProportionality(const QuasiTrigFunction& f, const QuasiTrigFunction& g)
{
    if (g.isZero())
        throw ZeroDenominator("proportionality against the zero function");
    if (f.variable() != g.variable())
        return std::nullopt;
    if (f.isZero())
        return Rational(0);
    if (!isInteger(f.sinExponent() - g.sinExponent()) || !isInteger(f.cosExponent() - g.cosExponent()))
        return std::nullopt;
    return (f / g).constantValue();
}

Rational proportionality(const QuasiTrigFunction& f, const QuasiTrigFunction& g)
{
    auto r = tryProportionality(f, g);
    if (!r)
        throw NotProportional(f.toString() + " is not a constant multiple of " + g.toString());
    return *r;
}

namespace {

Real evalPoly(const CPoly& p, const Real& x)
{
    Real r = 0;
    for (int i = p.degree(); i >= 0; --i)
        r = r * x + toReal(p[i]);
    return r;
}

Real absSum(const CPoly& p)
{
    Real r = 0;
    for (const auto& c : p.coefficients())
        r += abs(toReal(c));
    return r;
}

Real quasiPower(const Real& base, const Rational& e, const Real& tol, const char* name)
{
    if (e == 0)
        return Real(1);
    if (e < 0 && abs(base) <= tol)
        throw PoleAtPoint(std::string(name) + " vanishes under a negative power");
    if (!isInteger(e) && base < 0)
        throw DomainError(std::string("non-integer power of a negative ") + name);
    return pow(base, toReal(e));
}

} // namespace

Real evaluateNumeric(const QuasiTrigFunction& f, const Real& x, unsigned precisionBits)
{
    PrecisionScope scope(precisionBits);
    Real xx = x;
    Real s = sin(xx);
    Real c = cos(xx);
    const CPoly& d = f.denominator();
    Real dv = evalPoly(d, c);
    Real tol = ldexp(Real(1), -static_cast<int>(precisionBits) + 16) * absSum(d);
    if (abs(dv) <= tol)
        throw PoleAtPoint("denominator " + d.toString("c") + " vanishes at the evaluation point");
    if (f.isZero())
        return Real(0);
    Real nv = evalPoly(f.numerator().even, c) + s * evalPoly(f.numerator().odd, c);
    Real unit = ldexp(Real(1), -static_cast<int>(precisionBits) + 16);
    return quasiPower(s, f.sinExponent(), unit, "sine") * quasiPower(c, f.cosExponent(), unit, "cosine") * nv / dv;
}

} // namespace lissajous
