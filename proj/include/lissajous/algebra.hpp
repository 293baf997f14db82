#ifndef LISSAJOUS_ALGEBRA_HPP
#define LISSAJOUS_ALGEBRA_HPP

#include "lissajous/bivar.hpp"
#include "lissajous/eigen.hpp"
#include "lissajous/operators.hpp"
#include "lissajous/report.hpp"
#include "lissajous/structure.hpp"

#include <initializer_list>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

namespace lissajous {

// Constants of the standard-form polynomial algebra with A = H_phi, B = eta O, C = 2 n eta E'.
template <class T>
struct AlgebraSpec {
    int step = 1;
    int sigma = 1;
    // eta = i^etaPower
    int etaPower = 1;
    T etaSquared = T(-1);
    T anticommutatorCoeff;
    T bCoeff;
    T bSquaredCoeff;
    T sourceCoeff;
};

template <class T>
AlgebraSpec<T> algebraSpec(const ModelParamsT<T>& p)
{
    AlgebraSpec<T> s;
    s.step = phiStep(p);
    s.sigma = twistSign(p);
    s.etaPower = p.variant == Variant::OneParam ? p.m + p.n - 1 : 1;
    s.etaSquared = T(etaSquared(p));
    T n(s.step);
    s.anticommutatorCoeff = T(2) * n * n;
    s.bCoeff = T(-1) * n * n * n * n;
    s.bSquaredCoeff = T(-2) * n * n;
    s.sourceCoeff = T(2) * n;
    return s;
}

// X+X- and X-X+ in (H, sqrt(H_phi)) and the parts P1, P2 in (H, H_phi).
template <class T>
struct ProductPolys {
    BivarPoly<T> raiseLower;
    BivarPoly<T> lowerRaise;
    BivarPoly<T> P1;
    BivarPoly<T> P2;
};

template <class T>
ProductPolys<T> computeP1P2(const ModelParamsT<T>& p)
{
    ProductPolys<T> r;
    r.raiseLower = productPolynomial(p, -1);
    r.lowerRaise = productPolynomial(p, 1);
    r.P1 = r.raiseLower.parityPart(0).halveY();
    r.P2 = (-r.raiseLower.parityPart(1)).divideY().halveY();
    return r;
}

// weighted degrees of (P1, P2) with H and H_phi both of weight one
template <class T>
std::pair<int, int> expectedProductDegrees(const ModelParamsT<T>& p)
{
    int d = p.n + p.m;
    if (p.variant == Variant::TwoParam)
        d = 2 * p.n + 2 * p.m;
    if (p.variant == Variant::ExtTwoParam)
        d = 4 * p.n + 2 * p.m;
    return {d, d - 1};
}

template <class Space>
bool samePoly(const Space& space, const BivarPoly<typename Space::Scalar>& a, const BivarPoly<typename Space::Scalar>& b)
{
    for (const auto& [e, c] : a.terms())
        if (!space.same(c, b.coefficient(e.first, e.second)))
            return false;
    for (const auto& [e, c] : b.terms())
        if (!space.same(a.coefficient(e.first, e.second), c))
            return false;
    return true;
}

// P1(H, t^2) + sign * P2(H, t^2) t
template <class T>
BivarPoly<T> recombine(const ProductPolys<T>& pp, int sign)
{
    Polynomial<T> square(std::vector<T>{T(0), T(0), T(1)});
    return pp.P1.composeY(square) + T(sign) * (pp.P2.composeY(square) * BivarPoly<T>::y());
}

// Parity, reconstruction and degree checks on the products.
template <class Space>
VerificationReport verifyProductPolynomials(const Model<Space>& model)
{
    const auto& p = model.params();
    const Space& sp = model.phiSpace();
    auto pp = computeP1P2(p);
    VerificationReport report;
    std::string name = describe(p);
    auto rec = [&](const std::string& check, bool ok, const std::string& expected, const std::string& computed) {
        report.add(name, check, "polynomial", expected, computed, ok);
    };
    rec("parity X-X+(t) = X+X-(-t)", samePoly(sp, pp.lowerRaise, pp.raiseLower.reflectY()), "equal",
        samePoly(sp, pp.lowerRaise, pp.raiseLower.reflectY()) ? "equal" : "different");
    bool lower = samePoly(sp, recombine(pp, -1), pp.raiseLower);
    rec("X+X- = P1 - P2 sqrt(Hphi)", lower, "equal", lower ? "equal" : "different");
    bool upper = samePoly(sp, recombine(pp, 1), pp.lowerRaise);
    rec("X-X+ = P1 + P2 sqrt(Hphi)", upper, "equal", upper ? "equal" : "different");
    auto reconstructed = pp.lowerRaise - pp.raiseLower;
    auto twice = typename Space::Scalar(2) * (pp.P2.composeY(Polynomial<typename Space::Scalar>(
                                                  std::vector<typename Space::Scalar>{0, 0, 1})) *
                                              BivarPoly<typename Space::Scalar>::y());
    bool diff = samePoly(sp, reconstructed, twice);
    rec("X-X+ - X+X- = 2 P2 sqrt(Hphi)", diff, "equal", diff ? "equal" : "different");
    auto [d1, d2] = expectedProductDegrees(p);
    int c1 = pp.P1.weightedDegree(1, 1);
    int c2 = pp.P2.weightedDegree(1, 1);
    rec("deg P1", c1 == d1, std::to_string(d1), std::to_string(c1));
    rec("deg P2", c2 == d2, std::to_string(d2), std::to_string(c2));
    return report;
}

enum class Op { XPlus, XMinus, Hphi, SqrtHphi, H, O, Ecal, Eprime, P1, P2 };

std::string toString(Op op);

template <class T>
using Expansion = std::map<StateIndex, T>;

template <class T>
std::string toString(const Expansion<T>& v)
{
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : v) {
        os << (first ? "" : " + ") << "(" << toString(c) << ")" << toString(s);
        first = false;
    }
    return os.str();
}

template <class T>
Expansion<T> basisVector(const StateIndex& s)
{
    return {{s, T(1)}};
}

// a + c b
template <class T>
Expansion<T> axpy(Expansion<T> a, const T& c, const Expansion<T>& b)
{
    for (const auto& [s, v] : b) {
        T sum = a[s] + c * v;
        if (sum == 0)
            a.erase(s);
        else
            a[s] = sum;
    }
    return a;
}

template <class T>
Expansion<T> scaled(const T& c, const Expansion<T>& v)
{
    return axpy(Expansion<T>{}, c, v);
}

template <class Space>
bool sameExpansion(const Space& space, const Expansion<typename Space::Scalar>& a,
                   const Expansion<typename Space::Scalar>& b)
{
    using T = typename Space::Scalar;
    for (const auto& [s, c] : a) {
        auto it = b.find(s);
        if (!space.same(c, it == b.end() ? T(0) : it->second))
            return false;
    }
    for (const auto& [s, c] : b)
        if (!a.count(s) && !space.same(T(0), c))
            return false;
    return true;
}

// Operator words evaluated on eigenfunction expansions. The X actions come from
// symbolic application of the composite operators; H and H_phi eigenvalues come
// from applying the Hamiltonians to the concrete eigenfunctions.
template <class Space>
class StateAlgebra {
public:
    using T = typename Space::Scalar;
    using Vec = Expansion<T>;

    explicit StateAlgebra(const Model<Space>& model)
        : model_(model), spec_(algebraSpec(model.params())), polys_(computeP1P2(model.params())),
          cache_(std::make_shared<Cache>())
    {
    }

    const Model<Space>& model() const { return model_; }
    const AlgebraSpec<T>& spec() const { return spec_; }
    const ProductPolys<T>& polys() const { return polys_; }

    // X+/- Psi_s in the unnormalized basis; empty when annihilated
    Vec x(Direction d, const StateIndex& s) const
    {
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->x.find({d, s});
            if (it != cache_->x.end())
                return it->second;
        }
        auto act = applyX(model_, d, s);
        Vec v;
        if (!act.annihilated)
            v[act.target] = act.unnormalized;
        std::lock_guard lock(cache_->mutex);
        cache_->x.emplace(std::make_pair(d, s), v);
        return v;
    }

    T hphi(const StateIndex& s) const
    {
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->hphi.find(s.nu);
            if (it != cache_->hphi.end())
                return it->second;
        }
        auto f = model_.phi(s.nu);
        auto r = model_.phiSpace().ratio(model_.applyHphi(f), f);
        if (!r)
            throw NotProportional("H_phi Phi_" + std::to_string(s.nu) + " is not a multiple of Phi");
        std::lock_guard lock(cache_->mutex);
        cache_->hphi.emplace(s.nu, *r);
        return *r;
    }

    T sqrtHphi(const StateIndex& s) const { return model_.eps(s.nu); }

    T h(const StateIndex& s) const
    {
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->h.find(s);
            if (it != cache_->h.end())
                return it->second;
        }
        T k = model_.K(s.nu);
        auto th = model_.theta(k, s.mu);
        auto r = model_.thetaSpace().ratio(model_.applyHtheta(k, th), th);
        if (!r)
            throw NotProportional("H_theta on " + toString(s) + " is not a multiple of Theta");
        std::lock_guard lock(cache_->mutex);
        cache_->h.emplace(s, *r);
        return *r;
    }

    T p1(const StateIndex& s) const { return polys_.P1(h(s), hphi(s)); }
    T p2(const StateIndex& s) const { return polys_.P2(h(s), hphi(s)); }

    Vec apply(Op op, const Vec& v) const
    {
        Vec r;
        for (const auto& [s, c] : v)
            r = axpy(r, c, applyToState(op, s));
        return r;
    }

    // operator product, rightmost factor first
    Vec word(std::initializer_list<Op> ops, const Vec& v) const
    {
        std::vector<Op> seq(ops);
        Vec r = v;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it)
            r = apply(*it, r);
        return r;
    }

    Vec word(std::initializer_list<Op> ops, const StateIndex& s) const { return word(ops, basisVector<T>(s)); }

private:
    Vec applyToState(Op op, const StateIndex& s) const
    {
        T n(spec_.step);
        T sigma(spec_.sigma);
        switch (op) {
        case Op::XPlus:
            return x(Direction::Raise, s);
        case Op::XMinus:
            return x(Direction::Lower, s);
        case Op::Hphi:
            return {{s, hphi(s)}};
        case Op::SqrtHphi:
            return {{s, sqrtHphi(s)}};
        case Op::H:
            return {{s, h(s)}};
        case Op::P1:
            return {{s, p1(s)}};
        case Op::P2:
            return {{s, p2(s)}};
        case Op::O:
            return scaled(T(T(1) / (T(2) * sqrtHphi(s))),
                          axpy(x(Direction::Raise, s), T(-sigma), x(Direction::Lower, s)));
        case Op::Ecal:
            return scaled(T(T(1) / T(2)), axpy(x(Direction::Raise, s), sigma, x(Direction::Lower, s)));
        case Op::Eprime:
            return axpy(applyToState(Op::Ecal, s), T(n / T(2)), applyToState(Op::O, s));
        }
        return {};
    }

    struct Cache {
        std::mutex mutex;
        std::map<std::pair<Direction, StateIndex>, Vec> x;
        std::map<int, T> hphi;
        std::map<StateIndex, T> h;
    };

    Model<Space> model_;
    AlgebraSpec<T> spec_;
    ProductPolys<T> polys_;
    std::shared_ptr<Cache> cache_;
};

// Actions of O, E and E' on Psi_s.
template <class T>
struct OEPrime {
    Expansion<T> O;
    Expansion<T> E;
    Expansion<T> Eprime;
};

template <class Space>
OEPrime<typename Space::Scalar> buildOEprime(const StateAlgebra<Space>& alg, const StateIndex& s)
{
    return {alg.word({Op::O}, s), alg.word({Op::Ecal}, s), alg.word({Op::Eprime}, s)};
}

// P1 -/+ P2 eps on every state against the composed products X+X-, X-X+.
template <class Space>
VerificationReport verifyProductsOnStates(const Model<Space>& model, int muMax, int nuMax);

// [sqrt(H_phi), X+/-], [H_phi, X+/-], [X+, X-] and X+X- + X-X+ on every state of the box.
template <class Space>
VerificationReport verifyGHA(const Model<Space>& model, int muMax, int nuMax);

// Commutation relations of (H_phi, O, E, E'), the restriction relation, the
// standard form and its constraint, and the twisted Hermiticity of O and E'.
template <class Space>
VerificationReport verifyPolyAlgebra(const Model<Space>& model, int muMax, int nuMax);

// Realization of the polynomial algebra: polynomials in (H, z) with z = N + u.
template <class T>
struct CasimirRealization {
    int step = 1;
    BivarPoly<T> A;
    BivarPoly<T> B0;
    // 1 / rho^2(N)
    BivarPoly<T> rhoSquaredInverse;
    BivarPoly<T> Phi;
};

template <class T>
CasimirRealization<T> casimirRealization(const ModelParamsT<T>& p)
{
    CasimirRealization<T> r;
    r.step = phiStep(p);
    T n(r.step);
    auto z = BivarPoly<T>::y();
    r.A = T(n * n) * (z * z);
    r.rhoSquaredInverse = T(T(4) * n * n) * (z * (z + BivarPoly<T>(T(1))));
    auto pp = computeP1P2(p);
    Polynomial<T> a(std::vector<T>{T(0), T(0), T(n * n)});
    r.Phi = pp.P1.composeY(a) - n * (z * pp.P2.composeY(a));
    return r;
}

// The realization against the structure function and against the states of the box.
template <class Space>
VerificationReport verifyCasimir(const Model<Space>& model, int muMax, int nuMax);

} // namespace lissajous

#include "lissajous/algebra_verify.hpp"

#endif
