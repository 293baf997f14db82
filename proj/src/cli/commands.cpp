#include "lissajous/cli.hpp"

#include "lissajous/algebra.hpp"
#include "lissajous/eigen.hpp"
#include "lissajous/operators.hpp"
#include "lissajous/spectrum.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace lissajous::cli {

using lissajous::toString;

namespace {

std::string joinSuites(const std::vector<Suite>& suites)
{
    std::string out;
    for (Suite s : suites)
        out += (out.empty() ? "" : ",") + toString(s);
    return out.empty() ? "none" : out;
}

bool selected(const RunConfig& c, Suite s)
{
    return std::find(c.suites.begin(), c.suites.end(), s) != c.suites.end();
}

void writeFile(const std::string& path, const std::string& content)
{
    std::filesystem::path target(path);
    if (target.has_parent_path())
        std::filesystem::create_directories(target.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ConfigError("cannot write '" + path + "'");
    out << content;
    if (!out)
        throw ConfigError("failed writing '" + path + "'");
}

std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read reference table '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string header(const std::string& command, const RunConfig& c, const std::string& model)
{
    std::ostringstream os;
    os << "# lissajous " << command << '\n';
    os << "# model: " << model << '\n';
    os << "# mode: " << toString(c.mode);
    if (c.mode == Mode::Numeric)
        os << " precision_bits=" << c.precisionBits;
    os << '\n';
    return os.str();
}

std::string reportText(const std::string& head, const VerificationReport& report)
{
    std::ostringstream os;
    os << head;
    report.write(os);
    return os.str();
}

void listFailures(const VerificationReport& report, std::ostream& err)
{
    for (const auto& r : report.failures())
        err << "FAIL " << formatRecord(r) << '\n';
}

template <class Space>
void injectFault(const Model<Space>& model, const RunConfig& c, VerificationReport& report)
{
    using T = typename Space::Scalar;
    for (int nu = 0; nu <= c.nuMax; ++nu)
        for (int mu = 0; mu <= c.muMax; ++mu) {
            StateIndex s{mu, nu};
            auto act = applyX(model, Direction::Raise, s);
            if (act.annihilated)
                continue;
            auto bad = corrupted(act, T(T(11) / T(10)));
            detail::recordRadical(report, model.phiSpace(), describe(model.params()), "X+ (injected fault)",
                                  toString(s), closed::xRaise(model.params(), s),
                                  std::optional<RadicalScalarT<T>>(bad.normalized));
            return;
        }
}

template <class Space>
VerificationReport runSuites(const Model<Space>& model, const RunConfig& c)
{
    VerificationReport report;
    if (selected(c, Suite::Eigen))
        report.merge(verifyEigenfunctions(model, c.muMax, c.nuMax));
    if (selected(c, Suite::Actions)) {
        report.merge(verifyActionTables(model, c.muMax, c.nuMax));
        if (c.injectFault)
            injectFault(model, c, report);
    }
    if (selected(c, Suite::Products)) {
        report.merge(verifyProductPolynomials(model));
        report.merge(verifyProductsOnStates(model, c.muMax, c.nuMax));
    }
    if (selected(c, Suite::GHA))
        report.merge(verifyGHA(model, c.muMax, c.nuMax));
    if (selected(c, Suite::Poly))
        report.merge(verifyPolyAlgebra(model, c.muMax, c.nuMax));
    if (selected(c, Suite::Casimir))
        report.merge(verifyCasimir(model, c.muMax, c.nuMax));
    return report;
}

std::string verifyHeader(const RunConfig& c, const std::string& model)
{
    return header("verify", c, model) + "# box: mu_max=" + std::to_string(c.muMax) +
           " nu_max=" + std::to_string(c.nuMax) + '\n' + "# suites: " + joinSuites(c.suites) +
           (c.injectFault ? " inject_fault=true" : "") + '\n';
}

int finish(const VerificationReport& report, std::ostream& err)
{
    if (report.allPassed())
        return Success;
    listFailures(report, err);
    err << report.summaryLine() << '\n';
    return CheckFailure;
}

ModelParams exactOnly(const RunConfig& c, const std::string& command)
{
    if (c.mode != Mode::Exact)
        throw ConfigError(command + " requires mode = exact");
    return c.exactParams();
}

template <class F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return UsageError;
    } catch (const DomainError& e) {
        err << "config error: " << e.what() << '\n';
        return UsageError;
    } catch (const Error& e) {
        err << "check aborted: " << e.what() << '\n';
        return CheckFailure;
    }
}

std::string comparisonHeader(const RunConfig& c, const ModelParams& p, const Rational& cutoff)
{
    return header("compare", c, describe(p)) + "# pbar_max=" + std::to_string(c.pbarMax) +
           " energy_cutoff=" + toString(cutoff) + '\n';
}

// Compares the level table with the reference table, if one is configured.
void checkReference(const RunConfig& c, const std::string& name, const std::string& levels,
                    VerificationReport& report, std::ostream& err)
{
    if (c.referenceTable.empty())
        return;
    auto diff = tableDiff(readFile(c.referenceTable), levels);
    report.add(name, "level table matches reference", c.referenceTable, "identical",
               diff.empty() ? "identical" : std::to_string(diff.size()) + " differing lines", diff.empty());
    if (!diff.empty()) {
        err << "level table differs from " << c.referenceTable << ":\n";
        for (const auto& line : diff)
            err << line << '\n';
    }
}

} // namespace

std::string spectrumCsv(const ModelParams& p, int pbarMax)
{
    std::ostringstream os;
    os << "variant,branch,rtilde,ptilde,pbar,u,E,dim\n";
    for (const auto& sol : solveUnirreps(p, pbarMax).solutions)
        os << shortName(p.variant) << ',' << toString(sol.branch) << ',' << sol.rtilde << ',' << sol.ptilde << ','
           << sol.pbar << ',' << toString(sol.u) << ',' << toString(sol.E) << ',' << sol.dimension() << '\n';
    return os.str();
}

namespace {

std::string levelsCsvFrom(const ComparisonResult& result)
{
    std::ostringstream os;
    os << "E,physical,algebraic,multiplets\n";
    for (const auto& level : result.levels) {
        os << toString(level.E) << ',' << level.physicalStates << ',' << level.algebraicStates << ',';
        for (std::size_t i = 0; i < level.multiplets.size(); ++i)
            os << (i ? " " : "") << level.multiplets[i];
        os << '\n';
    }
    return os.str();
}

} // namespace

std::string levelsCsv(const ModelParams& p, int pbarMax, const std::optional<Rational>& cutoff)
{
    return levelsCsvFrom(physicalComparison(p, pbarMax, cutoff));
}

std::vector<std::string> tableDiff(const std::string& reference, const std::string& computed)
{
    auto lines = [](const std::string& text) {
        std::vector<std::string> out;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            out.push_back(line);
        }
        return out;
    };
    auto ref = lines(reference);
    auto got = lines(computed);
    std::vector<std::string> diff;
    std::size_t count = std::max(ref.size(), got.size());
    for (std::size_t i = 0; i < count; ++i) {
        bool hasRef = i < ref.size();
        bool hasGot = i < got.size();
        if (hasRef && hasGot && ref[i] == got[i])
            continue;
        if (hasRef)
            diff.push_back("line " + std::to_string(i + 1) + " - " + ref[i]);
        if (hasGot)
            diff.push_back("line " + std::to_string(i + 1) + " + " + got[i]);
    }
    return diff;
}

int cmdVerify(const RunConfig& c, std::ostream& err)
{
    return guarded(err, [&] {
        validate(c);
        VerificationReport report;
        std::string head;
        if (c.mode == Mode::Exact) {
            auto p = c.exactParams();
            head = verifyHeader(c, describe(p));
            report = runSuites(exactModel(p), c);
        } else {
            PrecisionScope scope(c.precisionBits);
            auto p = c.numericParams();
            NumericOptions opts;
            opts.precisionBits = c.precisionBits;
            auto model = numericModel(p, opts);
            head = verifyHeader(c, describe(p));
            report = runSuites(model, c);
            Real worst = std::max(model.thetaSpace().residuals().worst, model.phiSpace().residuals().worst);
            head += "# worst collocation residual: " + toString(worst, 6) + '\n';
        }
        writeFile(c.outputPath(".report.txt"), reportText(head, report));
        return finish(report, err);
    });
}

int cmdSpectrum(const RunConfig& c, std::ostream& err)
{
    return guarded(err, [&] {
        validate(c);
        auto p = exactOnly(c, "spectrum");
        auto report = verifySpectrum(p, c.pbarMax);
        std::string head = header("spectrum", c, describe(p)) + "# pbar_max=" + std::to_string(c.pbarMax) + '\n';
        writeFile(c.outputPath(".spectrum.csv"), spectrumCsv(p, c.pbarMax));
        writeFile(c.outputPath(".report.txt"), reportText(head, report));
        return finish(report, err);
    });
}

int cmdCompare(const RunConfig& c, std::ostream& err)
{
    return guarded(err, [&] {
        validate(c);
        auto p = exactOnly(c, "compare");
        auto result = physicalComparison(p, c.pbarMax, c.energyCutoff);
        std::string levels = levelsCsvFrom(result);
        checkReference(c, describe(p), levels, result.report, err);
        writeFile(c.outputPath(".levels.csv"), levels);
        writeFile(c.outputPath(".report.txt"), reportText(comparisonHeader(c, p, result.cutoff), result.report));
        return finish(result.report, err);
    });
}

int cmdExport(const RunConfig& c, std::ostream& err)
{
    return guarded(err, [&] {
        validate(c);
        auto p = exactOnly(c, "export");
        auto result = physicalComparison(p, c.pbarMax, c.energyCutoff);
        VerificationReport report = verifySpectrum(p, c.pbarMax);
        report.merge(result.report);
        std::string levels = levelsCsvFrom(result);
        checkReference(c, describe(p), levels, report, err);

        std::ostringstream actions;
        actions << "mu,nu,operator,target_mu,target_nu,sign,radicand\n";
        auto model = exactModel(p);
        for (int nu = 0; nu <= c.nuMax; ++nu)
            for (int mu = 0; mu <= c.muMax; ++mu)
                for (Direction d : {Direction::Raise, Direction::Lower}) {
                    StateIndex s{mu, nu};
                    auto act = applyX(model, d, s);
                    actions << mu << ',' << nu << ",X" << toString(d) << ',';
                    if (act.annihilated)
                        actions << ",,0,0\n";
                    else
                        actions << act.target.mu << ',' << act.target.nu << ',' << act.normalized.sign << ','
                                << toString(act.normalized.radicand) << '\n';
                }

        std::string head = header("export", c, describe(p)) + "# pbar_max=" + std::to_string(c.pbarMax) +
                           " energy_cutoff=" + toString(result.cutoff) + '\n';
        writeFile(c.outputPath(".spectrum.csv"), spectrumCsv(p, c.pbarMax));
        writeFile(c.outputPath(".levels.csv"), levels);
        writeFile(c.outputPath(".actions.csv"), actions.str());
        writeFile(c.outputPath(".report.txt"), reportText(head, report));
        return finish(report, err);
    });
}

} // namespace lissajous::cli
