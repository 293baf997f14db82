#include "lissajous/algebra.hpp"
#include "lissajous/eigen.hpp"
#include "lissajous/kernel_properties.hpp"
#include "lissajous/operators.hpp"
#include "lissajous/spectrum.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace lissajous;

namespace {

ModelParams params(Variant v, int m, int n, Rational alpha, Rational beta, int m1 = 0)
{
    ModelParams p;
    p.variant = v;
    p.m = m;
    p.n = n;
    p.alpha = std::move(alpha);
    p.beta = std::move(beta);
    p.m1 = m1;
    return p;
}

std::vector<ModelParams> parameterSets()
{
    std::vector<ModelParams> out;
    const std::pair<int, int> mn[] = {{1, 1}, {1, 2}, {2, 1}, {3, 2}};
    for (auto [m, n] : mn)
        for (const Rational& a : {Rational(1), frac(3, 2), Rational(2)})
            out.push_back(params(Variant::OneParam, m, n, a, frac(1, 2)));
    for (auto [m, n] : mn)
        for (const auto& [a, b] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(2), Rational(1)},
                                   std::pair{frac(3, 2), frac(5, 2)}})
            out.push_back(params(Variant::TwoParam, m, n, a, b));
    for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}})
        for (const auto& [a, b] : {std::pair{Rational(2), Rational(2)}, std::pair{Rational(3), frac(5, 2)}})
            out.push_back(params(Variant::ExtTwoParam, m, n, a, b, 1));
    return out;
}

struct Outcome {
    bool passed = false;
    std::string detail;
    std::vector<std::string> failures;
};

Outcome fromReport(const VerificationReport& r, const std::string& extra = "")
{
    Outcome o;
    o.passed = r.allPassed() && r.checked() > 0;
    o.detail = "checked=" + std::to_string(r.checked()) + " failed=" + std::to_string(r.failedCount()) +
               " skipped=" + std::to_string(r.skipped()) + extra;
    for (const auto& f : r.failures())
        o.failures.push_back(formatRecord(f));
    return o;
}

Outcome fromTallies(const std::vector<std::pair<std::string, PropertyTally>>& tallies)
{
    Outcome o;
    o.passed = true;
    long checks = 0, failures = 0;
    for (const auto& [name, t] : tallies) {
        checks += t.checks;
        failures += t.failures;
        o.passed = o.passed && t.failures == 0 && t.instances == 1000 && t.checks > 0;
        if (t.failures)
            o.failures.push_back(name + ": " + std::to_string(t.failures) + " failures");
        o.detail += (o.detail.empty() ? "" : " ") + name + "=" + std::to_string(t.instances);
    }
    o.detail += " checks=" + std::to_string(checks) + " failed=" + std::to_string(failures);
    return o;
}

template <class F>
VerificationReport overModels(const std::vector<Model<ExactSpace>>& models, F&& suite)
{
    VerificationReport all;
    for (const auto& model : models)
        all.merge(suite(model));
    return all;
}

} // namespace

int main()
{
    const int eigenBox = 5;
    const int algebraBox = 4;
    const int pbarMax = 6;

    auto sets = parameterSets();
    std::vector<Model<ExactSpace>> models;
    for (const auto& p : sets)
        models.push_back(exactModel(p));

    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "eigenfunction suite, mu,nu <= 5",
         [&] {
             return fromReport(overModels(models, [&](const auto& m) { return verifyEigenfunctions(m, eigenBox, eigenBox); }));
         }},
        {2, "action-table suite, mu,nu <= 5",
         [&] {
             return fromReport(overModels(models, [&](const auto& m) { return verifyActionTables(m, eigenBox, eigenBox); }));
         }},
        {3, "algebra suite on a 5x5 box",
         [&] {
             return fromReport(overModels(models, [&](const auto& m) {
                 VerificationReport r = verifyProductPolynomials(m);
                 r.merge(verifyProductsOnStates(m, algebraBox, algebraBox));
                 r.merge(verifyGHA(m, algebraBox, algebraBox));
                 r.merge(verifyPolyAlgebra(m, algebraBox, algebraBox));
                 return r;
             }));
         }},
        {4, "Casimir realization against X+X- polynomials and states",
         [&] {
             return fromReport(overModels(models, [&](const auto& m) { return verifyCasimir(m, algebraBox, algebraBox); }));
         }},
        {5, "spectrum suite to pbar = 6",
         [&] {
             VerificationReport r;
             for (const auto& p : sets)
                 r.merge(verifySpectrum(p, pbarMax));
             return fromReport(r);
         }},
        {6, "physical audit to E(pbar = 6)",
         [&] {
             VerificationReport r;
             long levels = 0;
             for (const auto& p : sets) {
                 auto result = physicalComparison(p, pbarMax);
                 levels += static_cast<long>(result.levels.size());
                 r.merge(result.report);
             }
             return fromReport(r, " levels=" + std::to_string(levels));
         }},
        {7, "numeric 2P m=n=1 alpha=sqrt(2) beta=1 at 256 bits, criteria 1-3",
         [&] {
             PrecisionScope scope(256);
             NumericParams p;
             p.variant = Variant::TwoParam;
             p.alpha = parseReal("sqrt(2)");
             p.beta = Real(1);
             NumericOptions opts;
             opts.precisionBits = 256;
             auto model = numericModel(p, opts);
             VerificationReport r = verifyEigenfunctions(model, eigenBox, eigenBox);
             r.merge(verifyActionTables(model, eigenBox, eigenBox));
             r.merge(verifyProductPolynomials(model));
             r.merge(verifyProductsOnStates(model, algebraBox, algebraBox));
             r.merge(verifyGHA(model, algebraBox, algebraBox));
             r.merge(verifyPolyAlgebra(model, algebraBox, algebraBox));
             Real worst = std::max(model.thetaSpace().residuals().worst, model.phiSpace().residuals().worst);
             Outcome o = fromReport(r, " worst-residual=" + toString(worst, 3));
             if (!(worst < Real("1e-30"))) {
                 o.passed = false;
                 o.failures.push_back("worst residual " + toString(worst, 6) + " is not below 1e-30");
             }
             return o;
         }},
        {8, "kernel property tests on 1000 random instances",
         [&] {
             return fromTallies({{"ring", checkRingAxioms(1000, 20240611)},
                                 {"product-rule", checkProductRule(1000, 7)},
                                 {"idempotence", checkCanonicalIdempotence(1000, 99)},
                                 {"reduction", checkReduction(1000, 31337)}});
         }},
    };

    std::cout << "acceptance over " << sets.size() << " parameter sets\n";
    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = "aborted";
            o.failures.push_back(e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.passed;
        std::ostringstream time;
        time << std::fixed << std::setprecision(1) << seconds;
        std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << " | " << c.title << " | "
                  << o.detail << " | " << time.str() << " s" << std::endl;
        for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i)
            std::cout << "    " << o.failures[i] << '\n';
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: some criteria failed") << std::endl;
    return all ? 0 : 1;
}
