#ifndef LISSAJOUS_EIGEN_HPP
#define LISSAJOUS_EIGEN_HPP

#include "lissajous/errors.hpp"
#include "lissajous/model.hpp"
#include "lissajous/orthopoly.hpp"
#include "lissajous/product.hpp"
#include "lissajous/report.hpp"
#include "lissajous/space.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace lissajous {

template <class Space>
struct Eigenfunction {
    typename Space::Function thetaPart;
    typename Space::Function phiPart;
    // squared norm of the unnormalized product, relative to mu = 0 at the same K and nu = 0
    typename Space::Scalar normSquared;
};

// One Lissajous system together with its separated eigenfunctions and
// Hamiltonians, over a pair of function spaces (theta, phi).
template <class Space>
class Model {
public:
    using T = typename Space::Scalar;
    using F = typename Space::Function;
    using Params = ModelParamsT<T>;

    Model(Params p, Space thetaSpace, Space phiSpace)
        : p_(std::move(p)), ts_(std::move(thetaSpace)), ps_(std::move(phiSpace)), cache_(std::make_shared<Cache>())
    {
        validate(p_);
        buildPotentials();
    }

    const Params& params() const { return p_; }
    const Space& thetaSpace() const { return ts_; }
    const Space& phiSpace() const { return ps_; }

    T K(int nu) const { return thetaK(p_, nu); }
    T eps(int nu) const { return epsilon(p_, nu); }
    T E(const StateIndex& s) const { return energy(p_, s); }

    // sin^K C_mu^(K+1/2)(-cos), unnormalized
    F theta(const T& K, int mu) const
    {
        std::lock_guard lock(cache_->mutex);
        auto key = std::make_pair(K, mu);
        auto it = cache_->theta.find(key);
        if (it != cache_->theta.end())
            return it->second;
        F f = ts_.sinPower(K) * ts_.cosPolynomial(reflect(gegenbauer<T>(mu, K + T(1) / T(2))));
        cache_->theta.emplace(key, f);
        return f;
    }

    // Phi_nu, unnormalized
    F phi(int nu) const
    {
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->phi.find(nu);
            if (it != cache_->phi.end())
                return it->second;
        }
        F f = buildPhi(nu);
        std::lock_guard lock(cache_->mutex);
        cache_->phi.emplace(nu, f);
        return f;
    }

    Eigenfunction<Space> eigenfunction(const StateIndex& s) const
    {
        T k = K(s.nu);
        return {theta(k, s.mu), phi(s.nu), T(1) / (phiNormSq(p_, s.nu) * thetaNormSqRatio<T>(k, 0, 0, s.mu))};
    }

    ProductSum<Space> state(const StateIndex& s) const { return ProductSum<Space>(theta(K(s.nu), s.mu), phi(s.nu)); }

    // seed function of the extension and its logarithmic derivative
    F chi() const
    {
        requireExtended();
        return ps_.cosPower(-p_.alpha - half()) * ps_.sinPower(p_.beta - half()) *
               ps_.cosPolynomial(inDoubleAngle(jacobi<T>(p_.m1, -p_.alpha - T(1), p_.beta - T(1))));
    }
    const F& superpotential() const
    {
        requireExtended();
        return w_;
    }

    // d/dphi - chi'/chi and its adjoint
    F applyA(const F& f) const { return ps_.derivative(f) - superpotential() * f; }
    F applyAdagger(const F& f) const { return T(-1) * ps_.derivative(f) - superpotential() * f; }

    // eigenfunctions of the (alpha+1, beta-1) two-parameter partner
    F partnerPhi(int nu) const
    {
        requireExtended();
        return ps_.cosPower(p_.alpha + T(3) / T(2)) * ps_.sinPower(p_.beta - half()) *
               ps_.cosPolynomial(inDoubleAngle(jacobi<T>(nu, p_.alpha + T(1), p_.beta - T(1))));
    }

    F applyHphi(const F& f) const { return potential_ * f - ps_.derivative(ps_.derivative(f)); }

    F applyPartnerHphi(const F& f) const
    {
        requireExtended();
        return partnerPotential_ * f - ps_.derivative(ps_.derivative(f));
    }

    F applyHtheta(const T& k, const F& f) const
    {
        F d = ts_.derivative(f);
        return k * k * ts_.sinPower(T(-2)) * f - ts_.derivative(d) - cot() * d;
    }

    // full Hamiltonian on a separated product
    ProductSum<Space> applyFullH(const F& thetaPart, const F& phiPart) const
    {
        F d = ts_.derivative(thetaPart);
        ProductSum<Space> r(T(-1) * ts_.derivative(d) - cot() * d, phiPart);
        r.add(kappa(p_) * kappa(p_) * ts_.sinPower(T(-2)) * thetaPart, applyHphi(phiPart));
        return r;
    }
    ProductSum<Space> applyFullH(const ProductSum<Space>& psi) const
    {
        ProductSum<Space> r;
        for (const auto& t : psi.terms())
            r += applyFullH(t.theta, t.phi);
        return r;
    }

    F cot() const { return ts_.cos() * ts_.sinPower(T(-1)); }
    F phiCot() const { return ps_.cos() * ps_.sinPower(T(-1)); }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<T, int>, F> theta;
        std::map<int, F> phi;
    };

    static T half() { return T(1) / T(2); }

    void requireExtended() const
    {
        if (p_.variant != Variant::ExtTwoParam)
            throw InvalidModel("supercharge requested for a model without rational extension");
    }

    void buildPotentials()
    {
        const T quarter = T(1) / T(4);
        potential_ = (p_.alpha * p_.alpha - quarter) * ps_.cosPower(T(-2));
        if (p_.variant != Variant::OneParam)
            potential_ = potential_ + (p_.beta * p_.beta - quarter) * ps_.sinPower(T(-2));
        if (p_.variant == Variant::ExtTwoParam) {
            F P = ps_.cosPolynomial(inDoubleAngle(jacobi<T>(p_.m1, -p_.alpha - T(1), p_.beta - T(1))));
            F logDerivative = ps_.derivative(P) / P;
            potential_ = potential_ - T(2) * ps_.derivative(logDerivative);
            F c = chi();
            w_ = ps_.derivative(c) / c;
            T a1 = p_.alpha + T(1);
            T b1 = p_.beta - T(1);
            partnerPotential_ = (a1 * a1 - quarter) * ps_.cosPower(T(-2)) + (b1 * b1 - quarter) * ps_.sinPower(T(-2));
        }
    }

    F buildPhi(int nu) const
    {
        switch (p_.variant) {
        case Variant::OneParam: {
            T l = lambda(p_);
            return ps_.cosPower(l) * ps_.sinPolynomial(gegenbauer<T>(nu, l));
        }
        case Variant::TwoParam:
            return ps_.cosPower(p_.alpha + half()) * ps_.sinPower(p_.beta + half()) *
                   ps_.cosPolynomial(inDoubleAngle(jacobi<T>(nu, p_.alpha, p_.beta)));
        case Variant::ExtTwoParam:
            return applyA(partnerPhi(nu));
        }
        return ps_.zero();
    }

    Params p_;
    Space ts_;
    Space ps_;
    F potential_;
    F partnerPotential_;
    F w_;
    std::shared_ptr<Cache> cache_;
};

template <class Space>
void recordRatio(VerificationReport& report, const std::string& model, const std::string& check,
                 const std::string& source, const typename Space::Scalar& expected,
                 const std::optional<typename Space::Scalar>& computed, const Space& space)
{
    bool ok = computed && space.same(*computed, expected);
    report.add(model, check, source, toString(expected), computed ? toString(*computed) : "not-proportional", ok);
}

// Eigen-equations of H_phi, H_theta and the full H on every state of the box.
template <class Space>
VerificationReport verifyEigenfunctions(const Model<Space>& model, int muMax, int nuMax)
{
    using T = typename Space::Scalar;
    VerificationReport report;
    const auto& p = model.params();
    std::string name = describe(p);
    for (int nu = 0; nu <= nuMax; ++nu) {
        auto f = model.phi(nu);
        T e = model.eps(nu);
        std::string src = "nu=" + std::to_string(nu);
        recordRatio(report, name, "Hphi", src, T(e * e), model.phiSpace().ratio(model.applyHphi(f), f), model.phiSpace());
        if (p.variant == Variant::ExtTwoParam) {
            auto g = model.partnerPhi(nu);
            recordRatio(report, name, "Hphi-partner", src, T(e * e),
                        model.phiSpace().ratio(model.applyPartnerHphi(g), g), model.phiSpace());
        }
        T k = model.K(nu);
        for (int mu = 0; mu <= muMax; ++mu) {
            StateIndex s{mu, nu};
            T energyValue = model.E(s);
            auto th = model.theta(k, mu);
            recordRatio(report, name, "Htheta", toString(s), energyValue,
                        model.thetaSpace().ratio(model.applyHtheta(k, th), th), model.thetaSpace());
            auto residual = model.applyFullH(th, f) - energyValue * ProductSum<Space>(th, f);
            bool ok = residual.isZero(model.thetaSpace(), model.phiSpace());
            report.add(name, "H", toString(s), toString(energyValue), ok ? toString(energyValue) : "residual-nonzero", ok);
        }
    }
    return report;
}

// Exact model over rational parameters.
Model<ExactSpace> exactModel(const ModelParams& p);

struct NumericOptions {
    unsigned precisionBits = 256;
    int samplePoints = 64;
    std::size_t jetLength = 16;
    std::string tolerance = "1e-30";
};

// Collocation model for real parameters; the precision scope must be active for its lifetime.
Model<SampledSpace> numericModel(const NumericParams& p, const NumericOptions& opts = {});

struct EnergyLevel {
    Rational energy;
    std::vector<StateIndex> states;
};

// states with E <= cutoff, grouped by energy, each group sorted by (nu, mu)
std::vector<EnergyLevel> physicalSpectrum(const ModelParams& p, const Rational& cutoff);

} // namespace lissajous

#endif
