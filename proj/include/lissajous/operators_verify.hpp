#ifndef LISSAJOUS_OPERATORS_VERIFY_HPP
#define LISSAJOUS_OPERATORS_VERIFY_HPP

#include "lissajous/closed_forms.hpp"
#include "lissajous/operators.hpp"

namespace lissajous {

namespace detail {

// r with f = r g, zero for the zero function, nullopt if not proportional
template <class Space>
std::optional<typename Space::Scalar> coefficientOf(const Space& space, const typename Space::Function& f,
                                                    const typename Space::Function& g)
{
    using T = typename Space::Scalar;
    if (space.isZero(f))
        return T(0);
    return space.ratio(f, g);
}

template <class Space>
bool sameRadical(const Space& space, const RadicalScalarT<typename Space::Scalar>& a,
                 const RadicalScalarT<typename Space::Scalar>& b)
{
    return a.sign == b.sign && space.same(a.radicand, b.radicand);
}

template <class Space>
void recordRadical(VerificationReport& report, const Space& space, const std::string& model, const std::string& op,
                   const std::string& source, const std::optional<typename Space::Scalar>& expectedSq,
                   const std::optional<RadicalScalarT<typename Space::Scalar>>& computed)
{
    using T = typename Space::Scalar;
    if (!expectedSq) {
        report.add(model, op, source, "undefined", computed ? toString(*computed) : "not-proportional", false);
        return;
    }
    RadicalScalarT<T> expected(1, *expectedSq);
    bool ok = computed && sameRadical(space, expected, *computed);
    report.add(model, op, source, toString(expected), computed ? toString(*computed) : "not-proportional", ok);
}

template <class Space>
void recordScalar(VerificationReport& report, const Space& space, const std::string& model, const std::string& op,
                  const std::string& source, const typename Space::Scalar& expected,
                  const std::optional<typename Space::Scalar>& computed)
{
    bool ok = computed && space.same(expected, *computed);
    report.add(model, op, source, toString(expected), computed ? toString(*computed) : "not-proportional", ok);
}

} // namespace detail

template <class Space>
VerificationReport verifyActionTables(const Model<Space>& model, int muMax, int nuMax)
{
    using T = typename Space::Scalar;
    using R = RadicalScalarT<T>;
    const auto& p = model.params();
    const Space& ts = model.thetaSpace();
    const Space& ps = model.phiSpace();
    const std::string name = describe(p);
    VerificationReport report;

    // phi ladders
    for (int nu = 0; nu <= nuMax; ++nu) {
        const std::string src = "nu=" + std::to_string(nu);
        auto f = model.phi(nu);
        int sPhi = phiNormSign(p, nu);

        auto up = detail::coefficientOf(ps, applyLadder(model, Direction::Raise, nu, f), model.phi(nu + 1));
        std::optional<R> upNorm;
        if (up) {
            int sgn = (*up > 0 ? 1 : (*up < 0 ? -1 : 0)) * sPhi * phiNormSign(p, nu + 1);
            upNorm = R(sgn, T(*up * *up * phiNormSq(p, nu) / phiNormSq(p, nu + 1)));
        }
        detail::recordRadical(report, ps, name, "B+", src, closed::ladderRaise(p, nu), upNorm);

        int idx = ladderIndex(p, Direction::Lower, nu);
        auto lowered = applyLadder(model, Direction::Lower, idx, f);
        std::optional<R> downNorm;
        if (nu == 0) {
            if (ps.isZero(lowered))
                downNorm = R();
        } else {
            auto down = detail::coefficientOf(ps, lowered, model.phi(nu - 1));
            if (down) {
                int sgn = (*down > 0 ? 1 : (*down < 0 ? -1 : 0)) * sPhi * phiNormSign(p, nu - 1);
                downNorm = R(sgn, T(*down * *down * phiNormSq(p, nu) / phiNormSq(p, nu - 1)));
            }
        }
        detail::recordRadical(report, ps, name, "B-", src, closed::ladderLower(p, nu), downNorm);

        if (p.variant == Variant::ExtTwoParam) {
            auto g = model.partnerPhi(nu);
            T e = model.eps(nu);
            T shifted = e * e - closed::seedEnergy(p);
            detail::recordScalar(report, ps, name, "Adag", src, closed::superchargeAdjointFactor(p, nu),
                                 detail::coefficientOf(ps, model.applyAdagger(f), g));
            detail::recordScalar(report, ps, name, "Adag A", src, shifted,
                                 detail::coefficientOf(ps, model.applyAdagger(model.applyA(g)), g));
            detail::recordScalar(report, ps, name, "A Adag", src, shifted,
                                 detail::coefficientOf(ps, model.applyA(model.applyAdagger(f)), f));
        }
    }
    if (p.variant == Variant::ExtTwoParam) {
        bool ok = ps.isZero(model.applyA(model.chi()));
        report.add(name, "A chi", "seed", "0", ok ? "0" : "nonzero", ok);
    }

    // theta shifts at the K values of the box
    for (int nu = 0; nu <= nuMax; ++nu) {
        T K = model.K(nu);
        for (int mu = 0; mu <= muMax; ++mu) {
            StateIndex s{mu, nu};
            const std::string src = toString(s);
            auto th = model.theta(K, mu);

            std::optional<R> upNorm;
            auto raised = applyShift(model, Direction::Raise, T(K + T(1)), th);
            if (mu == 0) {
                if (ts.isZero(raised))
                    upNorm = R();
            } else {
                auto up = detail::coefficientOf(ts, raised, model.theta(T(K + T(1)), mu - 1));
                if (up) {
                    int sgn = (*up > 0 ? 1 : (*up < 0 ? -1 : 0)) * thetaNormSign(mu) * thetaNormSign(mu - 1);
                    upNorm = R(sgn, T(*up * *up / thetaNormSqRatio<T>(K, mu, 1, -1)));
                }
            }
            detail::recordRadical(report, ts, name, "A+_{K+1}", src, std::optional<T>(closed::shiftRaise<T>(T(K + T(1)), mu)), upNorm);

            std::optional<R> downNorm;
            auto lowered = applyShift(model, Direction::Lower, K, th);
            auto down = detail::coefficientOf(ts, lowered, model.theta(T(K - T(1)), mu + 1));
            if (down) {
                int sgn = (*down > 0 ? 1 : (*down < 0 ? -1 : 0)) * thetaNormSign(mu) * thetaNormSign(mu + 1);
                downNorm = R(sgn, T(*down * *down / thetaNormSqRatio<T>(K, mu, -1, 1)));
            }
            detail::recordRadical(report, ts, name, "A-_K", src, std::optional<T>(closed::shiftLower<T>(K, mu)), downNorm);

            auto round = applyShift(model, Direction::Raise, K, lowered);
            detail::recordScalar(report, ts, name, "A+_K A-_K", src, closed::shiftLower<T>(K, mu),
                                 detail::coefficientOf(ts, round, th));
        }
    }

    // composites and their products
    for (int nu = 0; nu <= nuMax; ++nu)
        for (int mu = 0; mu <= muMax; ++mu) {
            StateIndex s{mu, nu};
            const std::string src = toString(s);
            std::optional<OperatorAction<T>> acts[2];
            for (Direction d : {Direction::Raise, Direction::Lower}) {
                const std::string op = "X" + toString(d);
                std::optional<OperatorAction<T>> act;
                std::optional<R> computed;
                try {
                    act = applyX(model, d, s);
                    computed = act->annihilated ? R() : act->normalized;
                } catch (const Error&) {
                }
                detail::recordRadical(report, ps, name, op, src,
                                      d == Direction::Raise ? closed::xRaise(p, s) : closed::xLower(p, s), computed);
                if (act && !act->annihilated) {
                    T e0 = model.E(s), e1 = model.E(act->target);
                    report.add(name, op + " energy", src, toString(e0), toString(e1), ps.same(e0, e1));
                }
                acts[d == Direction::Raise ? 0 : 1] = act;
            }
            // X+ X- and X- X+ as eigenvalues on the source state
            for (int first = 0; first < 2; ++first) {
                Direction d1 = first == 0 ? Direction::Lower : Direction::Raise;
                Direction d2 = first == 0 ? Direction::Raise : Direction::Lower;
                const std::string op = "X" + toString(d2) + "X" + toString(d1);
                T expected = first == 0 ? closed::productRaiseLower(p, s) : closed::productLowerRaise(p, s);
                std::optional<T> computed;
                const auto& a1 = acts[first == 0 ? 1 : 0];
                if (a1) {
                    if (a1->annihilated) {
                        computed = T(0);
                    } else {
                        try {
                            auto a2 = applyX(model, d2, a1->target);
                            if (a2.target == s)
                                computed = a2.annihilated ? T(0) : T(a1->unnormalized * a2.unnormalized);
                        } catch (const Error&) {
                        }
                    }
                }
                detail::recordScalar(report, ps, name, op, src, expected, computed);
            }
        }
    return report;
}

} // namespace lissajous

#endif
