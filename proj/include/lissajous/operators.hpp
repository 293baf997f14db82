#ifndef LISSAJOUS_OPERATORS_HPP
#define LISSAJOUS_OPERATORS_HPP

#include "lissajous/closed_forms.hpp"
#include "lissajous/eigen.hpp"
#include "lissajous/radical.hpp"

#include <optional>
#include <string>

namespace lissajous {

enum class Direction { Raise, Lower };
enum class Supercharge { A, Adjoint };

inline std::string toString(Direction d) { return d == Direction::Raise ? "+" : "-"; }

// A+_K = -d + (K-1) cot,  A-_K = d + K cot
template <class Space>
typename Space::Function applyShift(const Model<Space>& model, Direction d, const typename Space::Scalar& K,
                                    const typename Space::Function& f)
{
    using T = typename Space::Scalar;
    const Space& ts = model.thetaSpace();
    auto df = ts.derivative(f);
    auto cf = model.cot() * f;
    if (d == Direction::Raise)
        return (K - T(1)) * cf - df;
    return df + K * cf;
}

template <class Space>
typename Space::Function applySupercharge(const Model<Space>& model, Supercharge which, const typename Space::Function& f)
{
    return which == Supercharge::A ? model.applyA(f) : model.applyAdagger(f);
}

namespace detail {

// two-parameter ladder with explicit parameters (a, b)
template <class Space>
typename Space::Function jacobiLadder(const Space& ps, Direction d, const typename Space::Scalar& a,
                                      const typename Space::Scalar& b, int nu, const typename Space::Function& f)
{
    using T = typename Space::Scalar;
    T v(nu);
    auto sin2 = T(2) * ps.sin() * ps.cos();
    auto cos2 = ps.cosPolynomial(Polynomial<T>(std::vector<T>{T(-1), T(0), T(2)}));
    auto df = ps.derivative(f);
    T shift = b * b - a * a;
    if (d == Direction::Raise) {
        T s1 = a + b + T(2) + T(2) * v;
        T s0 = (a + b + T(1) + T(2) * v) * s1;
        return s1 * (sin2 * df) + s0 * (cos2 * f) + shift * f;
    }
    T s1 = a + b + T(2) * v;
    T s0 = (a + b + T(1) + T(2) * v) * s1;
    return T(-1) * s1 * (sin2 * df) + s0 * (cos2 * f) + shift * f;
}

} // namespace detail

// B+_nu, B-_nu of the model (the extension sandwiches the partner ladder between the supercharges)
template <class Space>
typename Space::Function applyLadder(const Model<Space>& model, Direction d, int nu, const typename Space::Function& f)
{
    using T = typename Space::Scalar;
    const auto& p = model.params();
    const Space& ps = model.phiSpace();
    switch (p.variant) {
    case Variant::OneParam: {
        T l = lambda(p) + T(nu);
        auto cdf = ps.cos() * ps.derivative(f);
        auto sf = ps.sin() * f;
        if (d == Direction::Raise)
            return l * sf - cdf;
        return cdf + (l + T(1)) * sf;
    }
    case Variant::TwoParam:
        return detail::jacobiLadder(ps, d, p.alpha, p.beta, nu, f);
    case Variant::ExtTwoParam: {
        auto inner = model.applyAdagger(f);
        inner = detail::jacobiLadder(ps, d, p.alpha + T(1), p.beta - T(1), nu, inner);
        return model.applyA(inner);
    }
    }
    return ps.zero();
}

// ladder index used by the factor acting on Phi_nu in the given direction
template <class T>
int ladderIndex(const ModelParamsT<T>& p, Direction d, int nu)
{
    if (d == Direction::Raise || p.variant != Variant::OneParam)
        return nu;
    return nu - 1;
}

template <class T>
struct OperatorAction {
    StateIndex source;
    StateIndex target;
    bool annihilated = false;
    // the first factor whose application gave zero
    std::string vanishingFactor;
    // image = unnormalized * (unnormalized target) in the unnormalized basis
    T unnormalized = T(0);
    RadicalScalarT<T> normalized;
};

template <class T>
StateIndex xTarget(const ModelParamsT<T>& p, Direction d, const StateIndex& s)
{
    int mt = thetaStep(p);
    if (d == Direction::Raise)
        return {s.mu - mt, s.nu + p.n};
    return {s.mu + mt, s.nu - p.n};
}

// squared ratio N_t^2 / N_s^2 of the normalization constants of two states whose K differ by an integer
template <class T>
T normalizationRatio(const ModelParamsT<T>& p, const StateIndex& s, const StateIndex& t)
{
    T K = thetaK(p, s.nu);
    T dKt = thetaK(p, t.nu) - K;
    int dK = integerValue(dKt);
    return phiNormSq(p, t.nu) / phiNormSq(p, s.nu) * thetaNormSqRatio<T>(K, s.mu, dK, t.mu - s.mu);
}

template <class T>
int normalizationSign(const ModelParamsT<T>& p, const StateIndex& s)
{
    return thetaNormSign(s.mu) * phiNormSign(p, s.nu);
}

// normalized coefficient from the unnormalized one: c N_s / N_t
template <class T>
RadicalScalarT<T> normalizeCoefficient(const ModelParamsT<T>& p, const StateIndex& s, const StateIndex& t, const T& r)
{
    int sgn = (r > 0 ? 1 : (r < 0 ? -1 : 0)) * normalizationSign(p, s) * normalizationSign(p, t);
    return RadicalScalarT<T>(sgn, T(r * r / normalizationRatio(p, s, t)));
}

template <class Space>
struct XImage {
    typename Space::Function theta;
    typename Space::Function phi;
    bool annihilated = false;
    std::string vanishingFactor;
};

// X+ or X- with the parameters of state s, applied factor by factor to theta(theta) * phi(phi)
template <class Space>
XImage<Space> composeX(const Model<Space>& model, Direction d, const StateIndex& s, typename Space::Function thetaPart,
                       typename Space::Function phiPart)
{
    using T = typename Space::Scalar;
    const auto& p = model.params();
    XImage<Space> img;
    int n = p.n;
    int mt = thetaStep(p);
    for (int j = 0; j < n && !img.annihilated; ++j) {
        int nuNow = d == Direction::Raise ? s.nu + j : s.nu - j;
        int idx = ladderIndex(p, d, nuNow);
        phiPart = applyLadder(model, d, idx, phiPart);
        if (model.phiSpace().isZero(phiPart)) {
            img.annihilated = true;
            img.vanishingFactor = "B" + toString(d) + "_" + std::to_string(idx);
        }
    }
    T K = model.K(s.nu);
    for (int j = 0; j < mt && !img.annihilated; ++j) {
        T Kj = d == Direction::Raise ? T(K + T(j + 1)) : T(K - T(j));
        thetaPart = applyShift(model, d, Kj, thetaPart);
        if (model.thetaSpace().isZero(thetaPart)) {
            img.annihilated = true;
            int offset = d == Direction::Raise ? j + 1 : -j;
            img.vanishingFactor = "A" + toString(d) + "_{K" + (offset >= 0 ? "+" : "") + std::to_string(offset) + "}";
        }
    }
    img.theta = std::move(thetaPart);
    img.phi = std::move(phiPart);
    return img;
}

// X+ or X- applied to the eigenstate s
template <class Space>
OperatorAction<typename Space::Scalar> applyX(const Model<Space>& model, Direction d, const StateIndex& s)
{
    using T = typename Space::Scalar;
    const auto& p = model.params();
    OperatorAction<T> act;
    act.source = s;
    act.target = xTarget(p, d, s);
    auto img = composeX(model, d, s, model.theta(model.K(s.nu), s.mu), model.phi(s.nu));
    act.annihilated = img.annihilated;
    act.vanishingFactor = img.vanishingFactor;
    auto& thetaPart = img.theta;
    auto& phiPart = img.phi;
    if (act.annihilated)
        return act;
    if (act.target.mu < 0 || act.target.nu < 0)
        throw OutOfLadder("X" + toString(d) + " on " + toString(s) + " leaves the ladder without annihilating");
    auto rPhi = model.phiSpace().ratio(phiPart, model.phi(act.target.nu));
    auto rTheta = model.thetaSpace().ratio(thetaPart, model.theta(model.K(act.target.nu), act.target.mu));
    if (!rPhi || !rTheta)
        throw NotProportional("X" + toString(d) + " on " + toString(s) + " is not a multiple of the target state");
    act.unnormalized = *rPhi * *rTheta;
    act.normalized = normalizeCoefficient(p, s, act.target, act.unnormalized);
    return act;
}

// closed-form normalized coefficient of X+/- (positive square root)
template <class T>
std::optional<RadicalScalarT<T>> expectedX(const ModelParamsT<T>& p, Direction d, const StateIndex& s)
{
    auto sq = d == Direction::Raise ? closed::xRaise(p, s) : closed::xLower(p, s);
    if (!sq)
        return std::nullopt;
    return RadicalScalarT<T>(1, *sq);
}

// Every shift, ladder, supercharge and composite action on the box mu <= muMax, nu <= nuMax.
template <class Space>
VerificationReport verifyActionTables(const Model<Space>& model, int muMax, int nuMax);

// Copy of the action with its coefficient multiplied by factor (negative-control fixtures).
template <class T>
OperatorAction<T> corrupted(OperatorAction<T> a, const T& factor)
{
    a.unnormalized = a.unnormalized * factor;
    a.normalized = factor * a.normalized;
    return a;
}

} // namespace lissajous

#include "lissajous/operators_verify.hpp"

#endif
