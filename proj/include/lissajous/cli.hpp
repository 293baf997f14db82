#ifndef LISSAJOUS_CLI_HPP
#define LISSAJOUS_CLI_HPP

#include "lissajous/errors.hpp"
#include "lissajous/model.hpp"
#include "lissajous/rational.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lissajous::cli {

enum ExitCode { Success = 0, CheckFailure = 1, UsageError = 2 };

struct ConfigError : Error {
    using Error::Error;
};

enum class Mode { Exact, Numeric };

std::string toString(Mode m);
Mode parseMode(const std::string& text);

enum class Suite { Eigen, Actions, Products, GHA, Poly, Casimir };

const std::vector<Suite>& allSuites();
std::string toString(Suite s);
Suite parseSuite(const std::string& text);

// Key-value pairs by section, in file order.
struct ConfigFile {
    std::map<std::string, std::map<std::string, std::string>> sections;

    std::optional<std::string> get(const std::string& section, const std::string& key) const;
};

// throws ConfigError on malformed lines, unknown sections and duplicate keys
ConfigFile parseConfigText(const std::string& text);

struct RunConfig {
    Variant variant = Variant::OneParam;
    int m = 1;
    int n = 1;
    int m1 = 0;
    std::string alphaText = "1";
    std::string betaText = "1/2";

    Mode mode = Mode::Exact;
    unsigned precisionBits = 256;
    int muMax = 4;
    int nuMax = 4;
    int pbarMax = 2;
    std::optional<Rational> energyCutoff;
    std::vector<Suite> suites = allSuites();
    bool injectFault = false;
    std::string referenceTable;

    std::string outputDirectory = ".";
    std::string prefix = "lissajous";

    // exact parameters; throws ConfigError when alpha or beta is not a rational
    ModelParams exactParams() const;
    // real parameters; the precision scope must be active
    NumericParams numericParams() const;

    std::string outputPath(const std::string& suffix) const;
};

// Command-line settings that take precedence over the config file.
struct Overrides {
    std::optional<std::string> mode;
    std::optional<std::string> outputDirectory;
    std::optional<std::string> prefix;
    std::optional<std::vector<std::string>> suites;

    void applyTo(ConfigFile& file) const;
};

// throws ConfigError; checks the invariants of the mode
RunConfig makeRunConfig(const ConfigFile& file);
RunConfig loadRunConfig(const std::string& path, const Overrides& overrides = {});
void validate(const RunConfig& config);

// Each command writes its files and returns an ExitCode; diagnostics go to err.
int cmdVerify(const RunConfig& config, std::ostream& err);
int cmdSpectrum(const RunConfig& config, std::ostream& err);
int cmdCompare(const RunConfig& config, std::ostream& err);
int cmdExport(const RunConfig& config, std::ostream& err);

// spectrum table with header variant,branch,rtilde,ptilde,pbar,u,E,dim
std::string spectrumCsv(const ModelParams& p, int pbarMax);

// level table with header E,physical,algebraic,multiplets
std::string levelsCsv(const ModelParams& p, int pbarMax, const std::optional<Rational>& cutoff);

// Line diff of two tables: "-" lines only in the reference, "+" lines only in the computed table.
std::vector<std::string> tableDiff(const std::string& reference, const std::string& computed);

} // namespace lissajous::cli

#endif
