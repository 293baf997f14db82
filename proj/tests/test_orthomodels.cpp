#include "doctest.h"

#include "lissajous/eigen.hpp"
#include "lissajous/errors.hpp"
#include "lissajous/orthopoly.hpp"

#include <random>

using namespace lissajous;

namespace {

using RPoly = Polynomial<Rational>;

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

// three-term recurrence, used only as an independent oracle
RPoly jacobiByRecurrence(int n, const Rational& a, const Rational& b)
{
    RPoly p0(Rational(1));
    if (n == 0)
        return p0;
    RPoly x = RPoly::x();
    RPoly p1 = RPoly(Rational((a - b) / 2)) + Rational((a + b + 2) / 2) * x;
    for (int k = 2; k <= n; ++k) {
        Rational c1 = 2 * k * (k + a + b) * (2 * k + a + b - 2);
        Rational c2 = (2 * k + a + b - 1) * (a * a - b * b);
        Rational c3 = (2 * k + a + b - 1) * (2 * k + a + b) * (2 * k + a + b - 2);
        Rational c4 = 2 * (k + a - 1) * (k + b - 1) * (2 * k + a + b);
        RPoly next = (RPoly(c2) + c3 * x) * p1 - c4 * p0;
        next = next / c1;
        p0 = p1;
        p1 = next;
    }
    return p1;
}

RPoly gegenbauerByRecurrence(int n, const Rational& l)
{
    RPoly p0(Rational(1));
    if (n == 0)
        return p0;
    RPoly x = RPoly::x();
    RPoly p1 = Rational(2 * l) * x;
    for (int k = 2; k <= n; ++k) {
        RPoly next = Rational(2 * (k + l - 1)) * x * p1 - Rational(k + 2 * l - 2) * p0;
        next = next / Rational(k);
        p0 = p1;
        p1 = next;
    }
    return p1;
}

} // namespace

TEST_CASE("jacobi polynomials")
{
    Rational a(3, 2), b(5, 2);
    CHECK(jacobi<Rational>(0, a, b) == RPoly(Rational(1)));
    RPoly p1 = jacobi<Rational>(1, a, b);
    CHECK(p1 == RPoly(std::vector<Rational>{Rational((a - b) / 2), Rational((a + b + 2) / 2)}));
    CHECK(jacobi<Rational>(2, Rational(0), Rational(0))(Rational(0)) == frac(-1, 2));
    // P_2^(1,1)(x) = 3(5x^2 - 1)/4
    CHECK(jacobi<Rational>(2, Rational(1), Rational(1)) == RPoly(std::vector<Rational>{frac(-3, 4), 0, frac(15, 4)}));

    // degree drops for the seed parameters
    CHECK(jacobi<Rational>(1, Rational(-3), Rational(1)) == RPoly(Rational(-2)));
    CHECK(jacobi<Rational>(1, Rational(-3), Rational(2)) ==
          RPoly(std::vector<Rational>{frac(-5, 2), frac(1, 2)}));

    std::mt19937 gen(7);
    std::uniform_int_distribution<int> num(-9, 12);
    for (int trial = 0; trial < 40; ++trial) {
        Rational ta = frac(num(gen), 2), tb = frac(num(gen), 3);
        for (int n = 0; n <= 6; ++n) {
            // the recurrence divides by 2k(k+a+b)(2k+a+b-2)
            bool singular = false;
            for (int k = 2; k <= n; ++k)
                if ((k + ta + tb) == 0 || (2 * k + ta + tb - 2) == 0)
                    singular = true;
            if (singular)
                continue;
            CHECK(jacobi<Rational>(n, ta, tb) == jacobiByRecurrence(n, ta, tb));
        }
    }
}

TEST_CASE("gegenbauer polynomials")
{
    Rational l(7, 3);
    CHECK(gegenbauer<Rational>(0, l) == RPoly(Rational(1)));
    CHECK(gegenbauer<Rational>(1, l) == Rational(2 * l) * RPoly::x());
    CHECK(gegenbauer<Rational>(2, frac(3, 2))(Rational(1)) == 6);
    for (int n = 0; n <= 8; ++n)
        for (Rational lam : {frac(1, 2), frac(3, 2), Rational(2), frac(11, 4)})
            CHECK(gegenbauer<Rational>(n, lam) == gegenbauerByRecurrence(n, lam));
    // C_n^(1/2) is the Legendre polynomial, C_n^(a)(1) = (2a)_n / n!
    CHECK(gegenbauer<Rational>(3, frac(1, 2)) == RPoly(std::vector<Rational>{0, frac(-3, 2), 0, frac(5, 2)}));
    CHECK(gegenbauer<Rational>(5, frac(5, 2))(Rational(1)) == rising<Rational>(Rational(5), 5) / 120);
}

TEST_CASE("model parameter validation")
{
    CHECK_NOTHROW(validate(params(Variant::OneParam, 1, 1, 1)));
    CHECK_THROWS_AS(validate(params(Variant::OneParam, 2, 4, 1)), InvalidModel);
    CHECK_THROWS_AS(validate(params(Variant::OneParam, 1, 1, frac(1, 2))), InvalidModel);
    CHECK_THROWS_AS(validate(params(Variant::OneParam, 1, 1, 1, 1)), InvalidModel);
    CHECK_THROWS_AS(validate(params(Variant::TwoParam, 1, 1, 1, frac(1, 2))), InvalidModel);
    CHECK_THROWS_AS(validate(params(Variant::ExtTwoParam, 1, 1, 2, 1, 1)), InvalidModel);
    CHECK_THROWS_AS(validate(params(Variant::ExtTwoParam, 1, 1, 2, 2, 3)), InvalidModel);
    CHECK_THROWS_AS(validate(params(Variant::ExtTwoParam, 1, 1, 2, 2, 0)), InvalidModel);
    CHECK((parseVariant("2P") == Variant::TwoParam));
    CHECK((parseVariant("ext-two-param") == Variant::ExtTwoParam));
    CHECK_THROWS_AS(parseVariant("three"), ParseError);
}

TEST_CASE("seed function numeric value")
{
    PrecisionScope scope(256);
    auto model = exactModel(params(Variant::ExtTwoParam, 1, 1, 2, 3, 1));
    Real x = parseReal("0.7");
    Real c = cos(x), s = sin(x);
    Real arg = -cos(2 * x);
    // P_1^(-3,2)(y) = -5/2 + y/2
    Real direct = pow(c, Real(-5) / 2) * pow(s, Real(5) / 2) * (Real(-5) / 2 + arg / 2);
    Real value = evaluateNumeric(model.chi(), x, 256);
    CHECK(abs(value - direct) < parseReal("1e-60"));
}

TEST_CASE("eigenfunction closed forms")
{
    auto one = exactModel(params(Variant::OneParam, 1, 1, 1));
    CHECK(one.phi(0) == QuasiTrigFunction::monomial(Variable::Phi, 0, frac(3, 2)));
    CHECK(one.theta(one.K(0), 0) == QuasiTrigFunction::monomial(Variable::Theta, frac(3, 2), 0));
    auto e = one.eigenfunction({0, 0});
    CHECK(e.normSquared == 1);

    auto two = exactModel(params(Variant::TwoParam, 1, 2, 2, frac(5, 2)));
    CHECK(two.phi(0) == QuasiTrigFunction::monomial(Variable::Phi, 3, frac(5, 2)));

    // extended ground state equals the Wronskian over the seed
    auto ext = exactModel(params(Variant::ExtTwoParam, 1, 1, 2, 2, 1));
    auto chi = ext.chi();
    auto f0 = ext.partnerPhi(0);
    auto ds = ExactSpace{Variable::Phi};
    auto wronskian = chi * ds.derivative(f0) - ds.derivative(chi) * f0;
    CHECK(ext.phi(0) == wronskian / chi);
    CHECK(ext.phi(0).denominator() == CPoly(Rational(1)));

    auto ext2 = exactModel(params(Variant::ExtTwoParam, 1, 1, 3, frac(5, 2), 1));
    CPoly seed = inDoubleAngle(jacobi<Rational>(1, Rational(-4), frac(3, 2))).monic();
    CHECK(seed.degree() == 2);
    for (int nu = 0; nu < 3; ++nu)
        CHECK(ext2.phi(nu).denominator() == seed);
}

TEST_CASE("hamiltonian eigenvalues")
{
    auto one = exactModel(params(Variant::OneParam, 1, 1, 1));
    CHECK(proportionality(one.applyHphi(one.phi(0)), one.phi(0)) == frac(9, 4));
    StateIndex s{2, 1};
    CHECK(one.K(1) == frac(5, 2));
    CHECK(one.E(s) == frac(99, 4));
    auto th = one.theta(one.K(1), 2);
    CHECK(proportionality(one.applyHtheta(one.K(1), th), th) == frac(99, 4));
    auto residual = one.applyFullH(one.state(s)) - frac(99, 4) * one.state(s);
    CHECK(residual.isZero(one.thetaSpace(), one.phiSpace()));
    auto wrong = one.applyFullH(one.state(s)) - frac(95, 4) * one.state(s);
    CHECK_FALSE(wrong.isZero(one.thetaSpace(), one.phiSpace()));

    auto two = exactModel(params(Variant::TwoParam, 1, 1, 2, 1));
    for (int nu = 0; nu < 4; ++nu)
        CHECK(proportionality(two.applyHphi(two.phi(nu)), two.phi(nu)) == (4 + 2 * nu) * (4 + 2 * nu));
    CHECK(two.E({0, 0}) == 20);

    auto ext = exactModel(params(Variant::ExtTwoParam, 1, 2, 3, frac(5, 2), 1));
    for (int nu = 0; nu < 4; ++nu) {
        Rational e = ext.eps(nu);
        CHECK(proportionality(ext.applyHphi(ext.phi(nu)), ext.phi(nu)) == e * e);
    }
}

TEST_CASE("eigen suite on small boxes")
{
    for (auto p : {params(Variant::OneParam, 3, 2, frac(3, 2)), params(Variant::TwoParam, 2, 1, frac(3, 2), frac(5, 2)),
                   params(Variant::ExtTwoParam, 1, 2, 3, frac(5, 2), 1)}) {
        auto report = verifyEigenfunctions(exactModel(p), 3, 3);
        CAPTURE(describe(p));
        CHECK(report.allPassed());
        CHECK(report.checked() > 20);
    }
}

TEST_CASE("extension is isospectral to the shifted two-parameter model")
{
    for (int a2 = 2; a2 <= 6; ++a2)
        for (int b2 = 4; b2 <= 7; ++b2) {
            auto ext = params(Variant::ExtTwoParam, 1, 1, frac(a2, 2), frac(b2, 2), 1);
            auto partner = params(Variant::TwoParam, 1, 1, ext.alpha + 1, ext.beta - 1);
            for (int nu = 0; nu < 10; ++nu)
                CHECK(epsilon(ext, nu) == epsilon(partner, nu));
        }
}

TEST_CASE("norm ratios are positive")
{
    for (auto p : {params(Variant::OneParam, 1, 1, 1), params(Variant::TwoParam, 1, 2, 2, 1),
                   params(Variant::ExtTwoParam, 1, 1, 2, 2, 1), params(Variant::ExtTwoParam, 2, 1, 3, frac(5, 2), 1)})
        for (int nu = 0; nu < 12; ++nu) {
            CHECK(phiNormSq(p, nu) > 0);
            CHECK(phiNormSq(p, nu + 1) / phiNormSq(p, nu) > 0);
            for (int mu = 0; mu < 6; ++mu)
                CHECK(thetaNormSqRatio<Rational>(thetaK(p, nu), mu, 1, 1) > 0);
        }
    // telescoping in K agrees with the one-step products
    Rational K(7, 3);
    CHECK(thetaNormSqRatio<Rational>(K, 2, 2, -1) ==
          thetaNormSqRatio<Rational>(K, 2, 1, 0) * thetaNormSqRatio<Rational>(K + 1, 2, 1, -1));
}

TEST_CASE("physical spectrum")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    auto ground = physicalSpectrum(p, frac(15, 4));
    REQUIRE(ground.size() == 1);
    CHECK(ground[0].energy == frac(15, 4));
    CHECK(ground[0].states == std::vector<StateIndex>{{0, 0}});

    auto levels = physicalSpectrum(p, frac(99, 4));
    REQUIRE(levels.size() == 4);
    for (int pbar = 0; pbar < 4; ++pbar) {
        CHECK(levels[pbar].energy == Rational((pbar + 2) * (pbar + 2)) - frac(1, 4));
        CHECK(levels[pbar].states.size() == static_cast<std::size_t>(pbar + 1));
    }
    CHECK(levels[1].states == std::vector<StateIndex>{{1, 0}, {0, 1}});
    CHECK(physicalSpectrum(p, frac(7, 2)).empty());
}

TEST_CASE("one-parameter degeneracy grows linearly within residue classes")
{
    for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{3, 2}}) {
        auto p = params(Variant::OneParam, m, n, frac(3, 2));
        auto levels = physicalSpectrum(p, Rational(400));
        for (const auto& level : levels) {
            std::map<std::pair<int, int>, std::vector<int>> classes;
            for (auto s : level.states)
                classes[{s.nu % n, s.mu % m}].push_back(s.nu / n + s.mu / m);
            for (const auto& [residue, pbars] : classes) {
                // every state of a class shares pbar, and the class has pbar + 1 members
                for (int q : pbars)
                    CHECK(q == pbars.front());
                CHECK(pbars.size() == static_cast<std::size_t>(pbars.front() + 1));
            }
        }
    }
}

TEST_CASE("numeric model for an irrational parameter")
{
    PrecisionScope scope(256);
    NumericParams p;
    p.variant = Variant::TwoParam;
    p.alpha = sqrt(Real(2));
    p.beta = 1;
    auto model = numericModel(p);
    auto report = verifyEigenfunctions(model, 2, 2);
    CHECK(report.allPassed());
    CHECK(model.phiSpace().residuals().accepted > 0);
    CHECK(model.phiSpace().residuals().worst < parseReal("1e-30"));
    CHECK(model.thetaSpace().residuals().worst < parseReal("1e-30"));
}
