#ifndef LISSAJOUS_SPECTRUM_HPP
#define LISSAJOUS_SPECTRUM_HPP

#include "lissajous/eigen.hpp"
#include "lissajous/model.hpp"
#include "lissajous/rational.hpp"
#include "lissajous/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lissajous {

// Factorized structure function:
// prefactor * prod (x + u - root) * prod (x + u - (offset + sign sqrt(1 + 4E)) / denominator)
struct EnergyRoot {
    Rational offset;
    int sign = 1;
    Rational denominator;
};

struct StructureFunctionSpec {
    Variant variant = Variant::OneParam;
    Rational prefactor;
    std::vector<Rational> alphaRoots;
    std::vector<EnergyRoot> energyRoots;
};

StructureFunctionSpec structureFunctionSpec(const ModelParams& p);

// Phi(x, E, u) from the product over p, r (and q)
Rational structureFunction(const ModelParams& p, const Rational& x, const Rational& u, const Rational& E);

// the same function from the factorized form; root = sqrt(1 + 4E) >= 0
Rational factorizedStructureFunction(const ModelParams& p, const Rational& x, const Rational& u, const Rational& E,
                                     const Rational& root);

// sqrt(1 + 4E) when it is rational; throws otherwise
Rational energyRoot(const Rational& E);

enum class Branch { U1, U2 };

std::string toString(Branch b);

// number of values of p-tilde (m, or 2m)
int ptildeCount(const ModelParams& p);

// E1 or E2 for the given labels
Rational branchEnergy(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar);

// u1 (independent of E) or u2 (uses sqrt(1 + 4E) for the branch energy)
Rational branchU(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar);

struct UnirrepSolution {
    Branch branch = Branch::U1;
    int rtilde = 1;
    int ptilde = 1;
    int pbar = 0;
    Rational u;
    Rational E;
    std::vector<Rational> phiValues;

    int dimension() const { return pbar + 1; }
};

struct UnirrepSearch {
    std::vector<UnirrepSolution> solutions;
    long candidates = 0;
    long rejected = 0;
    std::vector<std::string> rejections;
};

// Candidates of both branches for pbar <= pbarMax, kept when Phi(0) = Phi(pbar+1) = 0 and Phi > 0 inside.
UnirrepSearch solveUnirreps(const ModelParams& p, int pbarMax);

// Closed-form final structure functions Phi1, Phi2.
Rational finalStructureFunction(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar, const Rational& x);

// Constraint exactness, branch equivalence and final-vs-general agreement.
VerificationReport verifySpectrum(const ModelParams& p, int pbarMax);

// Labels of a physical state under nu = n nu' + a1, mu = mt mu' + a2, pbar = nu' + mu'.
struct PhysicalLabels {
    int nuPrime = 0;
    int muPrime = 0;
    int a1 = 0;
    int a2 = 0;
    int pbar = 0;
};

PhysicalLabels physicalLabels(const ModelParams& p, const StateIndex& s);

// The states of the multiplet of a branch-one solution, ordered by N = nu'.
std::vector<StateIndex> multipletStates(const ModelParams& p, Branch b, int rtilde, int ptilde, int pbar);

struct LevelComparison {
    Rational E;
    int physicalStates = 0;
    int algebraicStates = 0;
    // dimensions of the algebraic multiplets on the level
    std::vector<int> multiplets;
};

struct ComparisonResult {
    VerificationReport report;
    std::vector<LevelComparison> levels;
    Rational cutoff;
};

// Every physical level up to the cutoff against the algebraic multiplets.
// The default cutoff is auditCutoff(p, pbarMax); a larger one throws DomainError.
ComparisonResult physicalComparison(const ModelParams& p, int pbarMax,
                                    const std::optional<Rational>& cutoff = std::nullopt);

// energy below which every physical state has pbar <= pbarMax
Rational auditCutoff(const ModelParams& p, int pbarMax);

} // namespace lissajous

#endif
