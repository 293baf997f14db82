#include "doctest.h"

#include "lissajous/spectrum.hpp"

#include <random>

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
            params(Variant::OneParam, 3, 2, frac(3, 2)),
            params(Variant::OneParam, 2, 1, 2),
            params(Variant::TwoParam, 1, 1, 2, 1),
            params(Variant::TwoParam, 1, 2, 2, 1),
            params(Variant::TwoParam, 2, 1, frac(3, 2), frac(5, 2)),
            params(Variant::ExtTwoParam, 1, 1, 2, 2, 1),
            params(Variant::ExtTwoParam, 1, 2, 3, frac(5, 2), 1)};
}

} // namespace

TEST_CASE("structure function values")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    Rational u = frac(3, 2), E = frac(35, 4);
    CHECK(structureFunction(p, 0, u, E) == 0);
    CHECK(structureFunction(p, 1, u, E) == 15);
    CHECK(structureFunction(p, 2, u, E) == 0);
    CHECK(energyRoot(E) == 6);
    CHECK_THROWS_AS(energyRoot(Rational(1)), InvalidModel);
}

TEST_CASE("factorized form equals product form")
{
    std::mt19937 rng(20241017);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
    for (const auto& p : sampleModels())
        for (int i = 0; i < 20; ++i) {
            Rational x = frac(num(rng), den(rng));
            Rational u = frac(num(rng), den(rng));
            Rational w = abs(frac(num(rng), den(rng)));
            Rational root = 2 * w + 1;
            Rational E = (root * root - 1) / 4;
            CHECK(factorizedStructureFunction(p, x, u, E, root) == structureFunction(p, x, u, E));
        }
}

TEST_CASE("structure function specs")
{
    auto one = structureFunctionSpec(params(Variant::OneParam, 2, 3, 1));
    CHECK(one.alphaRoots.size() == 6);
    CHECK(one.energyRoots.size() == 4);
    CHECK(one.prefactor == Rational(16 * 729));
    auto two = structureFunctionSpec(params(Variant::TwoParam, 1, 2, 2, 1));
    CHECK(two.alphaRoots.size() == 8);
    CHECK(two.energyRoots.size() == 4);
    auto ext = structureFunctionSpec(params(Variant::ExtTwoParam, 1, 1, 2, 2, 1));
    CHECK(ext.alphaRoots.size() == 8);
    CHECK(ext.prefactor == Rational(256 * 16));
}

TEST_CASE("unirreps of the one-parameter model")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    auto search = solveUnirreps(p, 2);
    CHECK(search.rejected == 0);
    CHECK(search.candidates == 6);
    const UnirrepSolution* found = nullptr;
    for (const auto& s : search.solutions)
        if (s.branch == Branch::U1 && s.pbar == 1)
            found = &s;
    REQUIRE(found);
    CHECK(found->E == frac(35, 4));
    CHECK(found->u == frac(3, 2));
    CHECK((found->phiValues == std::vector<Rational>{0, 15, 0}));
    for (int pbar = 0; pbar <= 4; ++pbar) {
        Rational expected = Rational((pbar + 2) * (pbar + 2)) - frac(1, 4);
        CHECK(branchEnergy(p, Branch::U1, 1, 1, pbar) == expected);
        CHECK(branchEnergy(p, Branch::U2, 1, 1, pbar) == expected);
    }
    // singlets have no interior points
    auto singlets = solveUnirreps(p, 0);
    CHECK(singlets.solutions.size() == 2);
    for (const auto& s : singlets.solutions)
        CHECK(s.phiValues.size() == 2);
}

TEST_CASE("u2 uses the positive root")
{
    auto p = params(Variant::TwoParam, 1, 1, 2, 1);
    Rational E = branchEnergy(p, Branch::U2, 1, 2, 3);
    CHECK(branchU(p, Branch::U2, 1, 2, 3) == (2 * 2 - 1 - energyRoot(E)) / 4);
    CHECK(structureFunction(p, 0, branchU(p, Branch::U2, 1, 2, 3), E) == 0);
}

TEST_CASE("final structure functions")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    CHECK(finalStructureFunction(p, Branch::U1, 1, 1, 1, 1) == 15);
    auto two = params(Variant::TwoParam, 1, 1, 2, 1);
    Rational E = branchEnergy(two, Branch::U1, 1, 1, 1);
    Rational u = branchU(two, Branch::U1, 1, 1, 1);
    CHECK(finalStructureFunction(two, Branch::U1, 1, 1, 1, 1) == structureFunction(two, 1, u, E));
    for (const auto& q : sampleModels())
        for (Branch b : {Branch::U1, Branch::U2})
            CHECK(finalStructureFunction(q, b, 1, 1, 2, 0) == 0);
}

TEST_CASE("spectrum suite")
{
    for (const auto& p : sampleModels())
        requireAllPassed(verifySpectrum(p, 4));
}

TEST_CASE("physical labels")
{
    auto p = params(Variant::OneParam, 1, 1, 1);
    auto l = physicalLabels(p, {1, 0});
    CHECK(l.pbar == 1);
    CHECK(energy(p, StateIndex{1, 0}) == frac(35, 4));
    CHECK(energy(p, StateIndex{1, 0}) == branchEnergy(p, Branch::U1, l.a1 + 1, 1 - l.a2, l.pbar));
    auto q = params(Variant::TwoParam, 3, 2, 1, 1);
    auto r = physicalLabels(q, {13, 5});
    CHECK(r.a1 == 1);
    CHECK(r.nuPrime == 2);
    CHECK(r.a2 == 1);
    CHECK(r.muPrime == 2);
    CHECK(r.pbar == 4);
    auto states = multipletStates(q, Branch::U1, 2, 5, 4);
    CHECK(states.size() == 5);
    CHECK((states[2] == StateIndex{13, 5}));
}

TEST_CASE("physical audit")
{
    auto p = params(Variant::TwoParam, 1, 2, 2, 1);
    auto result = physicalComparison(p, 3);
    requireAllPassed(result.report);
    CHECK_FALSE(result.levels.empty());
    for (const auto& q : sampleModels()) {
        auto r = physicalComparison(q, 4);
        requireAllPassed(r.report);
        for (const auto& level : r.levels)
            CHECK(level.physicalStates == level.algebraicStates);
    }
}
