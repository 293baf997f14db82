#ifndef LISSAJOUS_ALGEBRA_VERIFY_HPP
#define LISSAJOUS_ALGEBRA_VERIFY_HPP

namespace lissajous {

namespace detail {

template <class Space>
void recordExpansion(VerificationReport& report, const Model<Space>& model, const std::string& check,
                     const StateIndex& s, const Expansion<typename Space::Scalar>& lhs,
                     const Expansion<typename Space::Scalar>& rhs)
{
    bool ok = sameExpansion(model.phiSpace(), lhs, rhs);
    report.add(describe(model.params()), check, toString(s), toString(rhs), toString(lhs), ok);
}

template <class Space>
void recordValue(VerificationReport& report, const Model<Space>& model, const std::string& check,
                 const std::string& source, const typename Space::Scalar& expected,
                 const typename Space::Scalar& computed)
{
    bool ok = model.phiSpace().same(computed, expected);
    report.add(describe(model.params()), check, source, toString(expected), toString(computed), ok);
}

template <class Space>
typename Space::Scalar coefficientAt(const Expansion<typename Space::Scalar>& v, const StateIndex& s)
{
    auto it = v.find(s);
    return it == v.end() ? typename Space::Scalar(0) : it->second;
}

template <class Space>
ProductSum<Space> asSum(const XImage<Space>& img)
{
    if (img.annihilated)
        return {};
    return ProductSum<Space>(img.theta, img.phi);
}

// X_{d2} X_{d1} Psi_s as functions, the outer factor taking the parameters of the intermediate state
template <class Space>
ProductSum<Space> composedProduct(const Model<Space>& model, Direction outer, Direction inner, const StateIndex& s)
{
    auto first = composeX(model, inner, s, model.theta(model.K(s.nu), s.mu), model.phi(s.nu));
    if (first.annihilated)
        return {};
    auto second = composeX(model, outer, xTarget(model.params(), inner, s), first.theta, first.phi);
    return asSum(second);
}

} // namespace detail

template <class Space>
VerificationReport verifyProductsOnStates(const Model<Space>& model, int muMax, int nuMax)
{
    using T = typename Space::Scalar;
    StateAlgebra<Space> alg(model);
    VerificationReport report;
    for (int nu = 0; nu <= nuMax; ++nu)
        for (int mu = 0; mu <= muMax; ++mu) {
            StateIndex s{mu, nu};
            T e = alg.sqrtHphi(s);
            T lower = alg.p1(s) - alg.p2(s) * e;
            T upper = alg.p1(s) + alg.p2(s) * e;
            detail::recordExpansion(report, model, "X+X- = P1 - P2 eps", s, alg.word({Op::XPlus, Op::XMinus}, s),
                                    lower == 0 ? Expansion<T>{} : Expansion<T>{{s, lower}});
            detail::recordExpansion(report, model, "X-X+ = P1 + P2 eps", s, alg.word({Op::XMinus, Op::XPlus}, s),
                                    upper == 0 ? Expansion<T>{} : Expansion<T>{{s, upper}});
        }
    return report;
}

template <class Space>
VerificationReport verifyGHA(const Model<Space>& model, int muMax, int nuMax)
{
    using T = typename Space::Scalar;
    StateAlgebra<Space> alg(model);
    const auto& spec = alg.spec();
    T n(spec.step);
    VerificationReport report;
    std::string name = describe(model.params());
    const Space& ts = model.thetaSpace();
    const Space& ps = model.phiSpace();
    for (int nu = 0; nu <= nuMax; ++nu)
        for (int mu = 0; mu <= muMax; ++mu) {
            StateIndex s{mu, nu};
            T e = alg.sqrtHphi(s);
            detail::recordValue(report, model, "sqrt(Hphi)^2 = Hphi", toString(s), alg.hphi(s), T(e * e));

            for (Direction d : {Direction::Raise, Direction::Lower}) {
                Op xop = d == Direction::Raise ? Op::XPlus : Op::XMinus;
                T sign(d == Direction::Raise ? 1 : -1);
                std::string tag = toString(d);

                auto comm = axpy(alg.word({Op::SqrtHphi, xop}, s), T(-1), alg.word({xop, Op::SqrtHphi}, s));
                detail::recordExpansion(report, model, "[sqrt(Hphi), X" + tag + "] = " + tag + "step X" + tag, s,
                                        comm, scaled(T(sign * n), alg.word({xop}, s)));

                auto img = composeX(model, d, s, model.theta(model.K(s.nu), s.mu), model.phi(s.nu));
                ProductSum<Space> residual;
                if (!img.annihilated) {
                    // H_phi X Psi - X H_phi Psi - X (+/-2 step sqrt(H_phi) + step^2) Psi
                    T factor = alg.hphi(s) + sign * T(2) * n * e + n * n;
                    residual = ProductSum<Space>(img.theta, model.applyHphi(img.phi)) -
                               factor * ProductSum<Space>(img.theta, img.phi);
                }
                bool ok = residual.isZero(ts, ps);
                report.add(name, "[Hphi, X" + tag + "] = X" + tag + "(" + tag + "2 step sqrt(Hphi) + step^2)",
                           toString(s), "0", ok ? "0" : "residual-nonzero", ok);
            }

            auto psi = model.state(s);
            auto raiseLower = detail::composedProduct(model, Direction::Raise, Direction::Lower, s);
            auto lowerRaise = detail::composedProduct(model, Direction::Lower, Direction::Raise, s);
            T p1 = alg.p1(s);
            T p2 = alg.p2(s);
            auto commutator = raiseLower - lowerRaise - T(T(-2) * p2 * e) * psi;
            bool okComm = commutator.isZero(ts, ps);
            report.add(name, "[X+, X-] = -2 P2 sqrt(Hphi)", toString(s), toString(T(T(-2) * p2 * e)),
                       okComm ? toString(T(T(-2) * p2 * e)) : "residual-nonzero", okComm);
            auto anti = raiseLower + lowerRaise - T(T(2) * p1) * psi;
            bool okAnti = anti.isZero(ts, ps);
            report.add(name, "X+X- + X-X+ = 2 P1", toString(s), toString(T(T(2) * p1)),
                       okAnti ? toString(T(T(2) * p1)) : "residual-nonzero", okAnti);
        }
    return report;
}

template <class Space>
VerificationReport verifyPolyAlgebra(const Model<Space>& model, int muMax, int nuMax)
{
    using T = typename Space::Scalar;
    using V = Expansion<T>;
    StateAlgebra<Space> alg(model);
    const auto& spec = alg.spec();
    const auto& p = model.params();
    T n(spec.step);
    T sigma(spec.sigma);
    T eta2 = spec.etaSquared;
    const T half = T(1) / T(2);
    VerificationReport report;
    auto W = [&](std::initializer_list<Op> ops, const StateIndex& s) { return alg.word(ops, s); };
    auto comb = [](std::initializer_list<std::pair<T, V>> parts) {
        V r;
        for (const auto& [c, v] : parts)
            r = axpy(r, c, v);
        return r;
    };
    const T one(1);
    for (int nu = 0; nu <= nuMax; ++nu)
        for (int mu = 0; mu <= muMax; ++mu) {
            StateIndex s{mu, nu};
            auto rec = [&](const std::string& check, const V& lhs, const V& rhs) {
                detail::recordExpansion(report, model, check, s, lhs, rhs);
            };
            using enum Op;

            rec("X+ = O sqrt(Hphi) + E", W({XPlus}, s), comb({{one, W({O, SqrtHphi}, s)}, {one, W({Ecal}, s)}}));
            rec("X- = eps(-O sqrt(Hphi) + E)", W({XMinus}, s),
                comb({{T(-sigma), W({O, SqrtHphi}, s)}, {sigma, W({Ecal}, s)}}));

            rec("[sqrt(Hphi), O] sqrt(Hphi) = step E",
                comb({{one, W({SqrtHphi, O, SqrtHphi}, s)}, {T(-1), W({O, SqrtHphi, SqrtHphi}, s)}}),
                scaled(n, W({Ecal}, s)));
            rec("[sqrt(Hphi), E] = step O sqrt(Hphi)", comb({{one, W({SqrtHphi, Ecal}, s)}, {T(-1), W({Ecal, SqrtHphi}, s)}}),
                scaled(n, W({O, SqrtHphi}, s)));
            rec("[Hphi, O] = step^2 O + 2 step E", comb({{one, W({Hphi, O}, s)}, {T(-1), W({O, Hphi}, s)}}),
                comb({{T(n * n), W({O}, s)}, {T(T(2) * n), W({Ecal}, s)}}));
            rec("[Hphi, E] = 2 step O Hphi + step^2 E", comb({{one, W({Hphi, Ecal}, s)}, {T(-1), W({Ecal, Hphi}, s)}}),
                comb({{T(T(2) * n), W({O, Hphi}, s)}, {T(n * n), W({Ecal}, s)}}));
            rec("[O, E] = -step O^2 - eps P2", comb({{one, W({O, Ecal}, s)}, {T(-1), W({Ecal, O}, s)}}),
                comb({{T(-n), W({O, O}, s)}, {T(-sigma), W({P2}, s)}}));
            rec("-O^2 Hphi + E^2 - step O E = eps P1",
                comb({{T(-1), W({O, O, Hphi}, s)}, {one, W({Ecal, Ecal}, s)}, {T(-n), W({O, Ecal}, s)}}),
                scaled(sigma, W({P1}, s)));

            rec("E' = E + step/2 O", W({Eprime}, s), comb({{one, W({Ecal}, s)}, {T(n * half), W({O}, s)}}));
            rec("[Hphi, O] = 2 step E'", comb({{one, W({Hphi, O}, s)}, {T(-1), W({O, Hphi}, s)}}),
                scaled(T(T(2) * n), W({Eprime}, s)));
            rec("[Hphi, E'] = step {Hphi, O} - step^3/2 O",
                comb({{one, W({Hphi, Eprime}, s)}, {T(-1), W({Eprime, Hphi}, s)}}),
                comb({{n, W({Hphi, O}, s)}, {n, W({O, Hphi}, s)}, {T(-half * n * n * n), W({O}, s)}}));
            rec("[O, E'] = -step O^2 - eps P2", comb({{one, W({O, Eprime}, s)}, {T(-1), W({Eprime, O}, s)}}),
                comb({{T(-n), W({O, O}, s)}, {T(-sigma), W({P2}, s)}}));
            rec("-O Hphi O + E'^2 + step^2/4 O^2 = eps (P1 + step/2 P2)",
                comb({{T(-1), W({O, Hphi, O}, s)}, {one, W({Eprime, Eprime}, s)}, {T(n * n / T(4)), W({O, O}, s)}}),
                comb({{sigma, W({P1}, s)}, {T(sigma * n * half), W({P2}, s)}}));

            // standard form on the real combinations B/eta = O, C/eta = 2 step E'
            V AB = W({Hphi, O}, s), BA = W({O, Hphi}, s);
            V C = scaled(T(T(2) * n), W({Eprime}, s));
            rec("[A, B] = C", axpy(AB, T(-1), BA), C);
            V AC = scaled(T(T(2) * n), axpy(W({Hphi, Eprime}, s), T(-1), W({Eprime, Hphi}, s)));
            rec("[A, C] = 2 step^2 {A, B} - step^4 B", AC,
                comb({{spec.anticommutatorCoeff, axpy(AB, one, BA)}, {spec.bCoeff, W({O}, s)}}));
            V BC = scaled(T(eta2 * T(2) * n), axpy(W({O, Eprime}, s), T(-1), W({Eprime, O}, s)));
            rec("[B, C] = -2 step^2 B^2 + 2 step P2", BC,
                comb({{T(spec.bSquaredCoeff * eta2), W({O, O}, s)}, {spec.sourceCoeff, W({P2}, s)}}));
            T fourN2 = T(4) * n * n;
            V lhs = comb({{T(eta2 * fourN2), W({Eprime, Eprime}, s)},
                          {T(T(-2) * n * n * eta2), W({Hphi, O, O}, s)},
                          {T(T(-2) * n * n * eta2), W({O, O, Hphi}, s)},
                          {T(T(5) * n * n * n * n * eta2), W({O, O}, s)}});
            rec("C^2 - 2 step^2 {A, B^2} + 5 step^4 B^2 = -4 step^2 (P1 - step/2 P2)", lhs,
                comb({{T(-fourN2), W({P1}, s)}, {T(fourN2 * n * half), W({P2}, s)}}));
        }

    // twisted Hermiticity in the normalized basis
    std::string name = describe(p);
    const Space& sp = model.phiSpace();
    std::map<StateIndex, V> oActions, eActions;
    for (int nu = 0; nu <= nuMax; ++nu)
        for (int mu = 0; mu <= muMax; ++mu) {
            StateIndex s{mu, nu};
            oActions[s] = alg.word({Op::O}, s);
            eActions[s] = alg.word({Op::Eprime}, s);
        }
    auto normalized = [&](const std::map<StateIndex, V>& actions, const StateIndex& s, const StateIndex& t) {
        T c = detail::coefficientAt<Space>(actions.at(s), t);
        return normalizeCoefficient(p, s, t, c);
    };
    for (const auto& [s, vs] : oActions)
        for (const auto& [t, c] : vs) {
            if (!oActions.count(t))
                continue;
            for (int which = 0; which < 2; ++which) {
                const auto& actions = which == 0 ? oActions : eActions;
                if (detail::coefficientAt<Space>(actions.at(s), t) == 0 && detail::coefficientAt<Space>(actions.at(t), s) == 0)
                    continue;
                auto forward = normalized(actions, s, t);
                auto backward = normalized(actions, t, s);
                T factor = which == 0 ? T(-sigma) : sigma;
                T expected = factor * backward.signedSquare();
                bool ok = sp.same(forward.signedSquare(), expected);
                report.add(name, which == 0 ? "O^dagger = -eps O" : "E'^dagger = eps E'",
                           toString(s) + "->" + toString(t), toString(factor * backward), toString(forward), ok);
            }
        }
    return report;
}

template <class Space>
VerificationReport verifyCasimir(const Model<Space>& model, int muMax, int nuMax)
{
    using T = typename Space::Scalar;
    const auto& p = model.params();
    StateAlgebra<Space> alg(model);
    auto real = casimirRealization(p);
    VerificationReport report;
    std::string name = describe(p);
    const Space& sp = model.phiSpace();
    auto structure = structurePolynomial(p);
    bool same = samePoly(sp, real.Phi, structure);
    report.add(name, "Phi(N) = structure function", "polynomial", "coefficient table of the structure function",
               same ? "equal" : "different", same);
    report.add(name, "B0(N) = 0", "polynomial", "0", real.B0.isZero() ? "0" : real.B0.toString("H", "z"),
               real.B0.isZero());
    T n(real.step);
    T eta2 = alg.spec().etaSquared;
    for (int nu = 0; nu <= nuMax; ++nu)
        for (int mu = 0; mu <= muMax; ++mu) {
            StateIndex s{mu, nu};
            std::string src = toString(s);
            T z = alg.sqrtHphi(s) / n;
            T E = alg.h(s);
            detail::recordValue(report, model, "A(N) = Hphi", src, alg.hphi(s), real.A(E, z));
            T phiN = real.Phi(E, z);
            T phiN1 = real.Phi(E, T(z + T(1)));
            T xpxm = detail::coefficientAt<Space>(alg.word({Op::XPlus, Op::XMinus}, s), s);
            T xmxp = detail::coefficientAt<Space>(alg.word({Op::XMinus, Op::XPlus}, s), s);
            detail::recordValue(report, model, "Phi(N) = X+X-", src, xpxm, phiN);
            detail::recordValue(report, model, "Phi(N+1) = X-X+", src, xmxp, phiN1);
            T diag = eta2 * detail::coefficientAt<Space>(alg.word({Op::O, Op::O}, s), s);
            T below = real.rhoSquaredInverse(E, T(z - T(1)));
            T rhoTerms = phiN1 / real.rhoSquaredInverse(E, z);
            if (!sp.isZeroScalar(phiN))
                rhoTerms += phiN / below;
            detail::recordValue(report, model, "B^2 diagonal = rho^2(N-1)Phi(N) + rho^2(N)Phi(N+1)", src, diag,
                                rhoTerms);
        }
    return report;
}

extern template VerificationReport verifyProductPolynomials(const Model<ExactSpace>&);
extern template VerificationReport verifyProductsOnStates(const Model<ExactSpace>&, int, int);
extern template VerificationReport verifyGHA(const Model<ExactSpace>&, int, int);
extern template VerificationReport verifyPolyAlgebra(const Model<ExactSpace>&, int, int);
extern template VerificationReport verifyCasimir(const Model<ExactSpace>&, int, int);
extern template VerificationReport verifyProductPolynomials(const Model<SampledSpace>&);
extern template VerificationReport verifyProductsOnStates(const Model<SampledSpace>&, int, int);
extern template VerificationReport verifyGHA(const Model<SampledSpace>&, int, int);
extern template VerificationReport verifyPolyAlgebra(const Model<SampledSpace>&, int, int);
extern template VerificationReport verifyCasimir(const Model<SampledSpace>&, int, int);

} // namespace lissajous

#endif
