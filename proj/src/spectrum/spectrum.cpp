#include "lissajous/spectrum.hpp"

#include "lissajous/closed_forms.hpp"
#include "lissajous/errors.hpp"
#include "lissajous/structure.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace lissajous {

namespace {

Rational power(const Rational& base, int e)
{
    Rational r(1);
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

bool twoParamFamily(const ModelParams& p)
{
    return p.variant != Variant::OneParam;
}

// inner value w with E = (mhat w)^2 - 1/4 for the branch energies
Rational branchInner(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar)
{
    Rational n(p.n);
    Rational mhat(thetaStep(p));
    Rational c = twoParamFamily(p) ? Rational(p.alpha + p.beta) : Rational(2 * p.alpha);
    if (b == Branch::U1)
        return Rational(pbar + 1) + (2 * rtilde - 1 + c) / (2 * n) + (1 - 2 * ptilde) / (2 * mhat);
    return Rational(pbar + 1) + (1 - 2 * rtilde + c) / (2 * n) + (2 * ptilde - 1) / (2 * mhat);
}

} // namespace

StructureFunctionSpec structureFunctionSpec(const ModelParams& p)
{
    validate(p);
    StructureFunctionSpec s;
    s.variant = p.variant;
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    Rational n(p.n), m(p.m);
    if (p.variant == Variant::OneParam) {
        s.prefactor = (p.m % 2 == 0 ? 1 : -1) * power(m, 2 * p.m) * power(n, 2 * p.n);
        for (int r = 1; r <= p.n; ++r) {
            s.alphaRoots.push_back((2 * r - 1 - 2 * a) / (2 * n));
            s.alphaRoots.push_back((2 * r - 1 + 2 * a) / (2 * n));
        }
        for (int q = 1; q <= p.m; ++q) {
            s.energyRoots.push_back({Rational(2 * q - 1), 1, Rational(2 * m)});
            s.energyRoots.push_back({Rational(2 * q - 1), -1, Rational(2 * m)});
        }
        return s;
    }
    int nPower = p.variant == Variant::TwoParam ? 4 * p.n : 8 * p.n;
    s.prefactor = power(2 * n, nPower) * power(2 * m, 4 * p.m);
    if (p.variant == Variant::ExtTwoParam) {
        Rational d = a - b - 2 * p.m1;
        for (int q = 1; q <= p.n; ++q) {
            s.alphaRoots.push_back((2 * q + 1 + d) / (2 * n));
            s.alphaRoots.push_back((2 * q - 1 - d) / (2 * n));
            s.alphaRoots.push_back((2 * q - 1 + d) / (2 * n));
            s.alphaRoots.push_back((2 * q - 3 - d) / (2 * n));
        }
    }
    for (int r = 1; r <= p.n; ++r) {
        s.alphaRoots.push_back((2 * r - 1 - a - b) / (2 * n));
        s.alphaRoots.push_back((2 * r - 1 + a + b) / (2 * n));
        if (p.variant == Variant::TwoParam) {
            s.alphaRoots.push_back((2 * r - 1 + a - b) / (2 * n));
            s.alphaRoots.push_back((2 * r - 1 - a + b) / (2 * n));
        } else {
            s.alphaRoots.push_back((2 * r + 1 + a - b) / (2 * n));
            s.alphaRoots.push_back((2 * r - 3 - a + b) / (2 * n));
        }
    }
    for (int q = 1; q <= 2 * p.m; ++q) {
        s.energyRoots.push_back({Rational(2 * q - 1), -1, Rational(4 * m)});
        s.energyRoots.push_back({Rational(2 * q - 1), 1, Rational(4 * m)});
    }
    return s;
}

Rational structureFunction(const ModelParams& p, const Rational& x, const Rational& u, const Rational& E)
{
    return structurePolynomial(p)(E, Rational(x + u));
}

Rational factorizedStructureFunction(const ModelParams& p, const Rational& x, const Rational& u, const Rational& E,
                                     const Rational& root)
{
    (void)E;
    auto s = structureFunctionSpec(p);
    Rational z = x + u;
    Rational r = s.prefactor;
    for (const auto& a : s.alphaRoots)
        r *= z - a;
    for (const auto& e : s.energyRoots)
        r *= z - (e.offset + e.sign * root) / e.denominator;
    return r;
}

Rational energyRoot(const Rational& E)
{
    auto r = exactSqrt(Rational(1 + 4 * E));
    if (!r)
        throw InvalidModel("1 + 4E is not the square of a rational for E = " + toString(E));
    return *r;
}

std::string toString(Branch b)
{
    return b == Branch::U1 ? "u1" : "u2";
}

int ptildeCount(const ModelParams& p)
{
    return thetaStep(p);
}

Rational branchEnergy(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar)
{
    Rational mhat(thetaStep(p));
    Rational w = mhat * branchInner(p, b, rtilde, ptilde, pbar);
    return w * w - Rational(1, 4);
}

Rational branchU(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar)
{
    Rational n(p.n);
    Rational c = twoParamFamily(p) ? Rational(p.alpha + p.beta) : Rational(2 * p.alpha);
    if (b == Branch::U1)
        return (2 * rtilde - 1 + c) / (2 * n);
    Rational root = energyRoot(branchEnergy(p, b, rtilde, ptilde, pbar));
    return (2 * ptilde - 1 - root) / (2 * Rational(thetaStep(p)));
}

UnirrepSearch solveUnirreps(const ModelParams& p, int pbarMax)
{
    validate(p);
    UnirrepSearch out;
    for (int pbar = 0; pbar <= pbarMax; ++pbar)
        for (Branch b : {Branch::U1, Branch::U2})
            for (int rt = 1; rt <= p.n; ++rt)
                for (int pt = 1; pt <= ptildeCount(p); ++pt) {
                    ++out.candidates;
                    UnirrepSolution sol;
                    sol.branch = b;
                    sol.rtilde = rt;
                    sol.ptilde = pt;
                    sol.pbar = pbar;
                    sol.E = branchEnergy(p, b, rt, pt, pbar);
                    sol.u = branchU(p, b, rt, pt, pbar);
                    for (int x = 0; x <= pbar + 1; ++x)
                        sol.phiValues.push_back(structureFunction(p, Rational(x), sol.u, sol.E));
                    std::string why;
                    if (sol.phiValues.front() != 0)
                        why = "Phi(0) != 0";
                    else if (sol.phiValues.back() != 0)
                        why = "Phi(pbar+1) != 0";
                    for (int x = 1; x <= pbar && why.empty(); ++x)
                        if (sol.phiValues[x] <= 0)
                            why = "Phi(" + std::to_string(x) + ") <= 0";
                    if (!why.empty()) {
                        ++out.rejected;
                        out.rejections.push_back(toString(b) + " rtilde=" + std::to_string(rt) + " ptilde=" +
                                                 std::to_string(pt) + " pbar=" + std::to_string(pbar) + ": " + why);
                        continue;
                    }
                    out.solutions.push_back(std::move(sol));
                }
    std::sort(out.solutions.begin(), out.solutions.end(), [](const UnirrepSolution& a, const UnirrepSolution& b) {
        int la = a.branch == Branch::U1 ? a.rtilde : a.ptilde;
        int lb = b.branch == Branch::U1 ? b.rtilde : b.ptilde;
        int sa = a.branch == Branch::U1 ? a.ptilde : a.rtilde;
        int sb = b.branch == Branch::U1 ? b.ptilde : b.rtilde;
        return std::tie(a.E, a.branch, la, sa, a.pbar) < std::tie(b.E, b.branch, lb, sb, b.pbar);
    });
    return out;
}

Rational finalStructureFunction(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar, const Rational& x)
{
    const Rational& a = p.alpha;
    const Rational& be = p.beta;
    Rational n(p.n), m(p.m);
    Rational rt(rtilde), pt(ptilde), top(pbar + 1);
    Rational r(1);
    if (p.variant == Variant::OneParam) {
        r = power(n, 2 * p.n) * power(m, 2 * p.m);
        if (b == Branch::U1) {
            for (int i = 1; i <= p.n; ++i)
                r *= (x + (rt - i) / n) * (x + (2 * a + rt - i) / n);
            for (int i = 1; i <= p.m; ++i)
                r *= (top - x - (pt - i) / m) * (top + x + (1 - pt - i) / m + (2 * a + 2 * rt - 1) / n);
        } else {
            for (int i = 1; i <= p.m; ++i)
                r *= (x + (pt - i) / m) * (2 * top - x + (2 * a - 2 * rt + 1) / n + (pt + i - 1) / m);
            for (int i = 1; i <= p.n; ++i)
                r *= (top - x - (rt - i) / n) * (top - x + (2 * a - rt + i) / n);
        }
        return r;
    }
    bool ext = p.variant == Variant::ExtTwoParam;
    Rational m1(p.m1);
    Rational m2 = 2 * m;
    r = power(2 * n, ext ? 8 * p.n : 4 * p.n) * power(m2, 4 * p.m);
    if (b == Branch::U1) {
        if (ext)
            for (int q = 1; q <= p.n; ++q)
                r *= (x + (rt - q + be + m1 - 1) / n) * (x + (rt - q + a - m1) / n) * (x + (rt - q + be + m1) / n) *
                     (x + (rt - q + a - m1 + 1) / n);
        for (int i = 1; i <= p.n; ++i) {
            r *= (x + (rt - i + a + be) / n) * (x + (rt - i) / n);
            if (ext)
                r *= (x + (rt - i + be - 1) / n) * (x + (rt - i + a + 1) / n);
            else
                r *= (x + (rt - i + be) / n) * (x + (rt - i + a) / n);
        }
        for (int i = 1; i <= 2 * p.m; ++i)
            r *= (top - x - (pt - i) / m2) * (top + x + (2 * rt - 1 + a + be) / n + (1 - pt - i) / m2);
        return r;
    }
    if (ext)
        for (int q = 1; q <= p.n; ++q)
            r *= (top - x - (rt - q - a + m1 - 1) / n) * (top - x - (rt - q - be - m1) / n) *
                 (top - x - (rt - q - a + m1) / n) * (top - x - (rt - q - be - m1 + 1) / n);
    for (int i = 1; i <= p.n; ++i) {
        r *= (top - x - (rt - i) / n) * (top - x + (a + be - rt + i) / n);
        if (ext)
            r *= (top - x + (a - rt + i + 1) / n) * (top - x + (be - rt + i - 1) / n);
        else
            r *= (top - x + (a - rt + i) / n) * (top - x + (be - rt + i) / n);
    }
    for (int i = 1; i <= 2 * p.m; ++i)
        r *= (x + (pt - i) / m2) * (2 * top - x + (pt + i - 1) / m2 + (1 + a + be - 2 * rt) / n);
    return r;
}

VerificationReport verifySpectrum(const ModelParams& p, int pbarMax)
{
    VerificationReport report;
    std::string name = describe(p);
    auto search = solveUnirreps(p, pbarMax);
    for (const auto& why : search.rejections)
        report.add(name, "unirrep constraints", why, "accepted", "rejected", false);
    std::multiset<Rational> e1, e2;
    for (const auto& s : search.solutions) {
        std::string src = toString(s.branch) + " rtilde=" + std::to_string(s.rtilde) +
                          " ptilde=" + std::to_string(s.ptilde) + " pbar=" + std::to_string(s.pbar);
        bool zeros = s.phiValues.front() == 0 && s.phiValues.back() == 0;
        report.add(name, "Phi(0) = Phi(pbar+1) = 0", src, "0, 0",
                   toString(s.phiValues.front()) + ", " + toString(s.phiValues.back()), zeros);
        bool positive = true;
        for (int x = 1; x <= s.pbar; ++x)
            positive = positive && s.phiValues[x] > 0;
        report.add(name, "Phi(x) > 0 inside", src, "positive", positive ? "positive" : "non-positive", positive);
        Rational root = energyRoot(s.E);
        for (int x = 0; x <= s.pbar + 1; ++x) {
            Rational general = s.phiValues[x];
            Rational fin = finalStructureFunction(p, s.branch, s.rtilde, s.ptilde, s.pbar, Rational(x));
            report.add(name, "final = general structure function", src + " x=" + std::to_string(x), toString(general),
                       toString(fin), fin == general);
            Rational fact = factorizedStructureFunction(p, Rational(x), s.u, s.E, root);
            report.add(name, "factorized = product form", src + " x=" + std::to_string(x), toString(general),
                       toString(fact), fact == general);
        }
        (s.branch == Branch::U1 ? e1 : e2).insert(s.E);
    }
    report.add(name, "E1 and E2 multisets coincide", "pbar<=" + std::to_string(pbarMax),
               std::to_string(e1.size()) + " energies", std::to_string(e2.size()) + " energies", e1 == e2);
    return report;
}

PhysicalLabels physicalLabels(const ModelParams& p, const StateIndex& s)
{
    PhysicalLabels l;
    int mt = thetaStep(p);
    l.nuPrime = s.nu / p.n;
    l.a1 = s.nu % p.n;
    l.muPrime = s.mu / mt;
    l.a2 = s.mu % mt;
    l.pbar = l.nuPrime + l.muPrime;
    return l;
}

std::vector<StateIndex> multipletStates(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar)
{
    int mt = thetaStep(p);
    int a1 = b == Branch::U1 ? rtilde - 1 : p.n - rtilde;
    int a2 = b == Branch::U1 ? mt - ptilde : ptilde - 1;
    std::vector<StateIndex> out;
    for (int N = 0; N <= pbar; ++N)
        out.push_back({mt * (pbar - N) + a2, p.n * N + a1});
    return out;
}

Rational auditCutoff(const ModelParams& p, int pbarMax)
{
    Rational best = branchEnergy(p, Branch::U1, 1, 1, pbarMax);
    for (int rt = 1; rt <= p.n; ++rt)
        for (int pt = 1; pt <= ptildeCount(p); ++pt)
            best = std::min(best, branchEnergy(p, Branch::U1, rt, pt, pbarMax));
    return best;
}

ComparisonResult physicalComparison(const ModelParams& p, int pbarMax, const std::optional<Rational>& cutoff)
{
    validate(p);
    ComparisonResult out;
    auto& report = out.report;
    std::string name = describe(p);
    out.cutoff = auditCutoff(p, pbarMax);
    if (cutoff) {
        if (*cutoff > out.cutoff)
            throw DomainError("energy cutoff " + toString(*cutoff) + " exceeds " + toString(out.cutoff) +
                              ", the range complete for pbar <= " + std::to_string(pbarMax));
        out.cutoff = *cutoff;
    }
    auto physical = physicalSpectrum(p, out.cutoff);
    auto search = solveUnirreps(p, pbarMax);
    int mt = thetaStep(p);

    for (const auto& level : physical)
        for (const auto& s : level.states) {
            auto l = physicalLabels(p, s);
            std::string src = toString(s);
            Rational e1 = branchEnergy(p, Branch::U1, l.a1 + 1, mt - l.a2, l.pbar);
            Rational e2 = branchEnergy(p, Branch::U2, p.n - l.a1, l.a2 + 1, l.pbar);
            report.add(name, "E = E1(a1+1, mt-a2, pbar)", src, toString(level.energy), toString(e1), e1 == level.energy);
            report.add(name, "E = E2(n-a1, a2+1, pbar)", src, toString(level.energy), toString(e2), e2 == level.energy);
            Rational u1 = branchU(p, Branch::U1, l.a1 + 1, mt - l.a2, l.pbar);
            Rational phi = structureFunction(p, Rational(l.nuPrime), u1, level.energy);
            Rational product = closed::productRaiseLower(p, s);
            report.add(name, "Phi(nu') = X+X- eigenvalue", src, toString(product), toString(phi), phi == product);
        }

    for (Branch b : {Branch::U1, Branch::U2}) {
        std::map<StateIndex, int> owner;
        std::map<Rational, std::pair<int, std::vector<int>>> algebraic;
        int index = 0;
        for (const auto& sol : search.solutions) {
            if (sol.branch != b || sol.E > out.cutoff)
                continue;
            ++index;
            auto states = multipletStates(p, b, sol.rtilde, sol.ptilde, sol.pbar);
            std::string src = toString(b) + " rtilde=" + std::to_string(sol.rtilde) +
                              " ptilde=" + std::to_string(sol.ptilde) + " pbar=" + std::to_string(sol.pbar);
            bool sameEnergy = true;
            for (const auto& s : states) {
                sameEnergy = sameEnergy && energy(p, s) == sol.E;
                owner[s] += 1;
            }
            report.add(name, "multiplet energy", src, toString(sol.E), sameEnergy ? toString(sol.E) : "mismatch",
                       sameEnergy);
            report.add(name, "multiplet dimension", src, std::to_string(sol.dimension()),
                       std::to_string(states.size()), static_cast<int>(states.size()) == sol.dimension());
            bool connected = true;
            for (std::size_t i = 0; i + 1 < states.size(); ++i) {
                auto raise = closed::xRaise(p, states[i]);
                auto lower = closed::xLower(p, states[i + 1]);
                connected = connected && raise && lower && *raise > 0 && *lower > 0;
            }
            report.add(name, "multiplet connected by X+/-", src, "nonzero", connected ? "nonzero" : "vanishing",
                       connected);
            auto bottom = closed::xLower(p, states.front());
            auto top = closed::xRaise(p, states.back());
            bool closedEnds = bottom && top && *bottom == 0 && *top == 0;
            report.add(name, "multiplet closed under X+/-", src, "0, 0",
                       (bottom ? toString(*bottom) : "undefined") + ", " + (top ? toString(*top) : "undefined"),
                       closedEnds);
            auto& slot = algebraic[sol.E];
            slot.first += sol.dimension();
            slot.second.push_back(sol.dimension());
        }
        for (const auto& level : physical) {
            auto it = algebraic.find(level.energy);
            int alg = it == algebraic.end() ? 0 : it->second.first;
            int phys = static_cast<int>(level.states.size());
            report.add(name, "level count " + toString(b), "E=" + toString(level.energy), std::to_string(phys),
                       std::to_string(alg), alg == phys);
            bool each = true;
            for (const auto& s : level.states)
                each = each && owner.count(s) && owner.at(s) == 1;
            report.add(name, "each state in one multiplet " + toString(b), "E=" + toString(level.energy), "true",
                       each ? "true" : "false", each);
            if (b == Branch::U1)
                out.levels.push_back({level.energy, phys, alg, it == algebraic.end() ? std::vector<int>{}
                                                                                     : it->second.second});
        }
        for (const auto& [e, slot] : algebraic) {
            bool physicalLevel = std::any_of(physical.begin(), physical.end(),
                                             [&](const EnergyLevel& l) { return l.energy == e; });
            if (!physicalLevel)
                report.add(name, "algebraic level is physical " + toString(b), "E=" + toString(e), "present",
                           "absent", false);
        }
    }
    return out;
}

} // namespace lissajous
