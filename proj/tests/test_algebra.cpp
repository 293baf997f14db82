#include "doctest.h"

#include "lissajous/algebra.hpp"

using namespace lissajous;

namespace {

ModelParams params(Variant v, int m, int n, Rational alpha, Rational beta = frac(1, 2), int m1 = 0)
{
    ModelParams p;
    p.variant = v;
    p.m = m;
    p.n = n;
    p.alpha = alpha;
    p.beta = beta;
    p.m1 = m1;
    return p;
}

void requireAllPassed(const VerificationReport& r)
{
    for (const auto& f : r.failures())
        MESSAGE(formatRecord(f));
    CHECK(r.allPassed());
    CHECK(r.checked() > 0);
}

std::vector<ModelParams> sampleModels()
{
    return {params(Variant::OneParam, 1, 1, 1),
            params(Variant::OneParam, 1, 2, frac(3, 2)),
            params(Variant::OneParam, 2, 1, 2),
            params(Variant::TwoParam, 1, 1, 2, 1),
            params(Variant::TwoParam, 1, 2, frac(3, 2), frac(5, 2)),
            params(Variant::ExtTwoParam, 1, 1, 2, 2, 1)};
}

} // namespace

TEST_CASE("bivariate polynomials")
{
    using P = BivarPoly<Rational>;
    P x = P::x(), y = P::y();
    P f = (x + y) * (x - y);
    CHECK((f == x * x - y * y));
    CHECK(f(Rational(3), Rational(2)) == 5);
    CHECK((f.reflectY() == f));
    CHECK((y.reflectY() == -y));
    CHECK(f.weightedDegree(1, 1) == 2);
    CHECK((f.parityPart(0).halveY() == x * x - y));
    P g = x * y * y * y + y;
    CHECK((g.divideY() == x * y * y + P(Rational(1))));
    CHECK_THROWS_AS(f.divideY(), std::invalid_argument);
    CHECK_THROWS_AS(g.halveY(), std::invalid_argument);
    Polynomial<Rational> q(std::vector<Rational>{1, 1});
    CHECK((f.composeY(q) == x * x - (y + P(Rational(1))) * (y + P(Rational(1)))));
}

TEST_CASE("P1 and P2 by hand expansion")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    auto pp = computeP1P2(p);
    using P = BivarPoly<Rational>;
    P H = P::x(), t = P::y();
    P lhs = (t * (t - P(Rational(1))) - P(frac(3, 4))) * (H - (t - P(Rational(1))) * t);
    CHECK((pp.raiseLower == lhs));
    P hphi = P::y();
    CHECK((pp.P1 == -(hphi * hphi) - frac(1, 4) * hphi + H * hphi - frac(3, 4) * H));
    CHECK((pp.P2 == Rational(-2) * hphi + P(frac(3, 4)) + H));
    CHECK((pp.lowerRaise == pp.raiseLower.reflectY()));
}

TEST_CASE("product degrees")
{
    auto two = computeP1P2(params(Variant::TwoParam, 1, 1, 2, 1));
    CHECK(two.P1.weightedDegree(1, 1) == 4);
    CHECK(two.P2.weightedDegree(1, 1) == 3);
    for (const auto& p : sampleModels())
        requireAllPassed(verifyProductPolynomials(exactModel(p)));
}

TEST_CASE("products on states")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    StateAlgebra<ExactSpace> alg(exactModel(p));
    StateIndex s{1, 1};
    Rational e = alg.sqrtHphi(s);
    CHECK(alg.p1(s) - alg.p2(s) * e == closed::productRaiseLower(p, s));
    CHECK(alg.p1(s) + alg.p2(s) * e == closed::productLowerRaise(p, s));

    auto e2 = params(Variant::ExtTwoParam, 1, 1, 2, 2, 1);
    auto model = exactModel(e2);
    StateAlgebra<ExactSpace> ealg(model);
    StateIndex t{2, 1};
    auto word = ealg.word({Op::XPlus, Op::XMinus}, t);
    CHECK(word.at(t) == ealg.p1(t) - ealg.p2(t) * ealg.sqrtHphi(t));
    CHECK(word.at(t) == closed::productRaiseLower(e2, t));

    // X- annihilates the bottom of the phi ladder
    StateIndex ground{0, 0};
    CHECK(alg.word({Op::XPlus, Op::XMinus}, ground).empty());
    CHECK(alg.p1(ground) - alg.p2(ground) * alg.sqrtHphi(ground) == 0);

    for (const auto& q : sampleModels())
        requireAllPassed(verifyProductsOnStates(exactModel(q), 3, 3));
}

TEST_CASE("generalized Heisenberg algebra")
{
    for (const auto& p : sampleModels())
        requireAllPassed(verifyGHA(exactModel(p), 3, 3));
}

TEST_CASE("O and E' expansions")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    auto model = exactModel(p);
    StateAlgebra<ExactSpace> alg(model);
    StateIndex ground{0, 0};
    auto g = buildOEprime(alg, ground);
    auto xp = alg.word({Op::XPlus}, ground);
    Rational e0 = alg.sqrtHphi(ground);
    CHECK((g.O == scaled(Rational(1 / (2 * e0)), xp)));
    CHECK((g.E == scaled(frac(1, 2), xp)));

    StateIndex s{2, 2};
    auto v = buildOEprime(alg, s);
    std::set<StateIndex> targets;
    for (const auto& [t, c] : v.O)
        targets.insert(t);
    CHECK((targets == std::set<StateIndex>{{1, 3}, {3, 1}}));
    CHECK((v.Eprime == axpy(v.E, frac(1, 2), v.O)));
}

TEST_CASE("polynomial algebra")
{
    for (const auto& p : sampleModels())
        requireAllPassed(verifyPolyAlgebra(exactModel(p), 3, 3));
}

TEST_CASE("Casimir realization")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    auto real = casimirRealization(p);
    CHECK(real.B0.isZero());
    CHECK((real.Phi == structurePolynomial(p)));
    StateAlgebra<ExactSpace> alg(exactModel(p));
    StateIndex s{1, 2};
    Rational z = alg.sqrtHphi(s) / real.step;
    CHECK(real.A(Rational(0), z) == alg.hphi(s));
    CHECK(real.rhoSquaredInverse(Rational(0), z) == 4 * z * (z + 1));
    for (const auto& q : sampleModels())
        requireAllPassed(verifyCasimir(exactModel(q), 3, 3));
}

TEST_CASE("perturbed polynomial is detected")
{
    auto p = params(Variant::TwoParam, 1, 1, 2, 1);
    auto real = casimirRealization(p);
    auto bad = real.Phi + BivarPoly<Rational>::monomial(frac(1, 1000), 1, 1);
    CHECK_FALSE(samePoly(ExactSpace{}, bad, structurePolynomial(p)));
}
