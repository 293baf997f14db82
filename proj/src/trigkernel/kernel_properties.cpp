#include "lissajous/kernel_properties.hpp"

#include "lissajous/errors.hpp"
#include "lissajous/space.hpp"
#include "lissajous/trig_function.hpp"

#include <random>

namespace lissajous {

namespace {

using F = QuasiTrigFunction;
const Variable V = Variable::Theta;

struct Raw {
    Rational a, b;
    TrigPoly num, den;
};

class Generator {
public:
    explicit Generator(unsigned seed) : rng_(seed) {}

    Rational small()
    {
        std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
        Rational q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    CPoly poly(int maxDegree)
    {
        std::uniform_int_distribution<int> deg(0, maxDegree);
        std::vector<Rational> c(deg(rng_) + 1);
        for (auto& x : c)
            x = small();
        return CPoly(std::move(c));
    }

    // exponents share the fractional parts given, so results can be added
    Raw raw(const Rational& fa, const Rational& fb)
    {
        std::uniform_int_distribution<int> shift(-2, 2), coin(0, 3);
        Raw r;
        r.a = fa + shift(rng_);
        r.b = fb + shift(rng_);
        do {
            r.num = TrigPoly(poly(3), coin(rng_) == 0 ? CPoly() : poly(2));
        } while (r.num.isZero());
        switch (coin(rng_)) {
        case 0:
            r.den = TrigPoly(CPoly(Rational(1)));
            break;
        case 1:
            r.den = TrigPoly(CPoly(std::vector<Rational>{1, -1}) * CPoly(std::vector<Rational>{2, 0, 1}));
            break;
        case 2:
            r.den = TrigPoly(CPoly(std::vector<Rational>{Rational(5, 2), 0, 1}), CPoly(Rational(1)));
            break;
        default:
            r.den = TrigPoly(CPoly(std::vector<Rational>{0, 3, 1}));
            break;
        }
        return r;
    }

    F function(const Rational& fa, const Rational& fb)
    {
        Raw r = raw(fa, fb);
        return F::fromParts(V, r.a, r.b, r.num, r.den);
    }

    Rational fraction()
    {
        static const Rational choices[] = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(-1, 2)};
        std::uniform_int_distribution<int> pick(0, 3);
        return choices[pick(rng_)];
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

Real evalRaw(const Raw& r, const Real& x)
{
    Real s = sin(x), c = cos(x);
    auto ev = [&](const CPoly& p) {
        Real v = 0;
        for (int i = p.degree(); i >= 0; --i)
            v = v * c + toReal(p[i]);
        return v;
    };
    Real num = ev(r.num.even) + s * ev(r.num.odd);
    Real den = ev(r.den.even) + s * ev(r.den.odd);
    return pow(s, toReal(r.a)) * pow(c, toReal(r.b)) * num / den;
}

void tally(PropertyTally& t, bool ok)
{
    ++t.checks;
    t.failures += !ok;
}

} // namespace

PropertyTally checkRingAxioms(int instances, unsigned seed)
{
    Generator gen(seed);
    PropertyTally t;
    for (int i = 0; i < instances; ++i, ++t.instances) {
        Rational fa = gen.fraction(), fb = gen.fraction();
        F f = gen.function(fa, fb), g = gen.function(fa, fb), h = gen.function(fa, fb);
        tally(t, (f + g) + h == f + (g + h));
        tally(t, f + g == g + f);
        tally(t, (f * g) * h == f * (g * h));
        tally(t, f * g == g * f);
        tally(t, f * (g + h) == f * g + f * h);
        tally(t, (f - f).isZero());
        tally(t, f * F::constant(V, 1) == f);
    }
    return t;
}

PropertyTally checkProductRule(int instances, unsigned seed)
{
    Generator gen(seed);
    PropertyTally t;
    for (int i = 0; i < instances; ++i, ++t.instances) {
        F f = gen.function(gen.fraction(), gen.fraction());
        F g = gen.function(gen.fraction(), gen.fraction());
        tally(t, differentiate(f * g) == differentiate(f) * g + f * differentiate(g));
    }
    return t;
}

PropertyTally checkCanonicalIdempotence(int instances, unsigned seed)
{
    Generator gen(seed);
    PropertyTally t;
    for (int i = 0; i < instances; ++i, ++t.instances) {
        F f = gen.function(gen.fraction(), gen.fraction());
        F g = gen.function(gen.fraction(), gen.fraction());
        for (const F& x : {f, f * g, differentiate(f), f / g}) {
            F again = x.canonicalized();
            tally(t, again == x && again.toString() == x.toString());
        }
    }
    return t;
}

PropertyTally checkReduction(int instances, unsigned seed, unsigned precisionBits)
{
    PrecisionScope scope(precisionBits);
    Generator gen(seed);
    std::uniform_real_distribution<double> where(0.05, 1.5);
    PropertyTally t;
    Real tol("1e-40");
    for (int i = 0; i < instances; ++i, ++t.instances) {
        Raw r = gen.raw(gen.fraction(), gen.fraction());
        F f = F::fromParts(V, r.a, r.b, r.num, r.den);
        F g = gen.function(gen.fraction(), gen.fraction());
        for (int k = 0; k < 32; ++k) {
            Real x(where(gen.engine()));
            Real raw = evalRaw(r, x);
            Real fv, gv, fg;
            try {
                fv = evaluateNumeric(f, x, precisionBits);
                gv = evaluateNumeric(g, x, precisionBits);
                fg = evaluateNumeric(f * g, x, precisionBits);
            } catch (const PoleAtPoint&) {
                continue;
            }
            Real scale = std::max(Real(1), Real(abs(raw)));
            tally(t, abs(fv - raw) <= tol * scale);
            Real pscale = std::max(Real(1), Real(abs(fv * gv)));
            tally(t, abs(fg - fv * gv) <= tol * pscale);
        }
    }
    return t;
}

} // namespace lissajous
