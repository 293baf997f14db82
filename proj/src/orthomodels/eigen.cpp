#include "lissajous/eigen.hpp"

#include <algorithm>

namespace lissajous {

Model<ExactSpace> exactModel(const ModelParams& p)
{
    return Model<ExactSpace>(p, ExactSpace{Variable::Theta}, ExactSpace{Variable::Phi});
}

Model<SampledSpace> numericModel(const NumericParams& p, const NumericOptions& opts)
{
    Real tol = parseReal(opts.tolerance);
    Real halfPi = pi() / 2;
    Real phiLo = p.variant == Variant::OneParam ? Real(-halfPi) : Real(0);
    auto thetaSpace = SampledSpace::onInterval(Variable::Theta, Real(0), pi(), opts.samplePoints, opts.jetLength, tol);
    auto phiSpace = SampledSpace::onInterval(Variable::Phi, phiLo, halfPi, opts.samplePoints, opts.jetLength, tol);
    return Model<SampledSpace>(p, thetaSpace, phiSpace);
}

std::vector<EnergyLevel> physicalSpectrum(const ModelParams& p, const Rational& cutoff)
{
    validate(p);
    std::map<Rational, std::vector<StateIndex>> groups;
    for (int nu = 0; energy(p, StateIndex{0, nu}) <= cutoff; ++nu)
        for (int mu = 0; energy(p, StateIndex{mu, nu}) <= cutoff; ++mu)
            groups[energy(p, StateIndex{mu, nu})].push_back({mu, nu});
    std::vector<EnergyLevel> out;
    for (auto& [e, states] : groups) {
        std::sort(states.begin(), states.end(), [](const StateIndex& a, const StateIndex& b) {
            return std::pair(a.nu, a.mu) < std::pair(b.nu, b.mu);
        });
        out.push_back({e, std::move(states)});
    }
    return out;
}

} // namespace lissajous
