#include "lissajous/cli.hpp"

#include "lissajous/real.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lissajous::cli {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

const std::map<std::string, std::set<std::string>>& knownKeys()
{
    static const std::map<std::string, std::set<std::string>> keys = {
        {"model", {"variant", "m", "n", "alpha", "beta", "m1"}},
        {"run",
         {"mode", "precision_bits", "mu_max", "nu_max", "pbar_max", "energy_cutoff", "eigen", "actions", "products",
          "gha", "poly", "casimir", "inject_fault", "reference_table"}},
        {"output", {"directory", "prefix"}},
    };
    return keys;
}

Rational rationalValue(const std::string& key, const std::string& text)
{
    try {
        return parseRational(text);
    } catch (const ParseError& e) {
        throw ConfigError(key + ": " + e.what());
    }
}

int integerValue(const std::string& key, const std::string& text, int lowest)
{
    Rational q = rationalValue(key, text);
    if (!isInteger(q) || !q.get_num().fits_sint_p())
        throw ConfigError(key + ": expected an integer, got '" + text + "'");
    int v = static_cast<int>(q.get_num().get_si());
    if (v < lowest)
        throw ConfigError(key + ": expected an integer >= " + std::to_string(lowest) + ", got " + std::to_string(v));
    return v;
}

bool booleanValue(const std::string& key, const std::string& text)
{
    if (text == "true")
        return true;
    if (text == "false")
        return false;
    throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

} // namespace

std::string toString(Mode m)
{
    return m == Mode::Exact ? "exact" : "numeric";
}

Mode parseMode(const std::string& text)
{
    if (text == "exact")
        return Mode::Exact;
    if (text == "numeric")
        return Mode::Numeric;
    throw ConfigError("mode: expected exact or numeric, got '" + text + "'");
}

const std::vector<Suite>& allSuites()
{
    static const std::vector<Suite> suites = {Suite::Eigen, Suite::Actions, Suite::Products,
                                              Suite::GHA,   Suite::Poly,    Suite::Casimir};
    return suites;
}

std::string toString(Suite s)
{
    switch (s) {
    case Suite::Eigen:
        return "eigen";
    case Suite::Actions:
        return "actions";
    case Suite::Products:
        return "products";
    case Suite::GHA:
        return "gha";
    case Suite::Poly:
        return "poly";
    case Suite::Casimir:
        return "casimir";
    }
    return "unknown";
}

Suite parseSuite(const std::string& text)
{
    for (Suite s : allSuites())
        if (toString(s) == text)
            return s;
    throw ConfigError("unknown suite '" + text + "' (expected eigen, actions, products, gha, poly or casimir)");
}

std::optional<std::string> ConfigFile::get(const std::string& section, const std::string& key) const
{
    auto sec = sections.find(section);
    if (sec == sections.end())
        return std::nullopt;
    auto it = sec->second.find(key);
    if (it == sec->second.end())
        return std::nullopt;
    return it->second;
}

ConfigFile parseConfigText(const std::string& text)
{
    ConfigFile file;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = raw;
        for (std::size_t i = 1; i < line.size(); ++i)
            if (line[i] == '#' && (line[i - 1] == ' ' || line[i - 1] == '\t')) {
                line.erase(i);
                break;
            }
        line = trim(line);
        std::string where = "line " + std::to_string(lineNo) + ": ";
        if (line.empty() || line[0] == '#' || line[0] == ';')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(where + "unterminated section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            if (!knownKeys().count(section))
                throw ConfigError(where + "unknown section [" + section + "]");
            file.sections[section];
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + "expected key = value, got '" + line + "'");
        if (section.empty())
            throw ConfigError(where + "key outside of a section");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!knownKeys().at(section).count(key))
            throw ConfigError(where + "unknown key '" + key + "' in [" + section + "]");
        if (value.empty())
            throw ConfigError(where + "empty value for '" + key + "'");
        if (!file.sections[section].emplace(key, value).second)
            throw ConfigError(where + "duplicate key '" + key + "' in [" + section + "]");
    }
    return file;
}

ModelParams RunConfig::exactParams() const
{
    ModelParams p;
    p.variant = variant;
    p.m = m;
    p.n = n;
    p.m1 = m1;
    p.alpha = rationalValue("alpha", alphaText);
    p.beta = rationalValue("beta", betaText);
    return p;
}

NumericParams RunConfig::numericParams() const
{
    NumericParams p;
    p.variant = variant;
    p.m = m;
    p.n = n;
    p.m1 = m1;
    try {
        p.alpha = parseReal(alphaText);
        p.beta = parseReal(betaText);
    } catch (const ParseError& e) {
        throw ConfigError(std::string("model: ") + e.what());
    }
    return p;
}

std::string RunConfig::outputPath(const std::string& suffix) const
{
    std::string dir = outputDirectory;
    if (!dir.empty() && dir.back() != '/')
        dir += '/';
    return dir + prefix + suffix;
}

RunConfig makeRunConfig(const ConfigFile& file)
{
    RunConfig c;
    if (auto v = file.get("model", "variant")) {
        try {
            c.variant = parseVariant(*v);
        } catch (const ParseError& e) {
            throw ConfigError(std::string("variant: ") + e.what());
        }
    }
    if (auto v = file.get("model", "m"))
        c.m = integerValue("m", *v, 1);
    if (auto v = file.get("model", "n"))
        c.n = integerValue("n", *v, 1);
    if (auto v = file.get("model", "m1"))
        c.m1 = integerValue("m1", *v, 0);
    if (auto v = file.get("model", "alpha"))
        c.alphaText = *v;
    if (auto v = file.get("model", "beta"))
        c.betaText = *v;

    if (auto v = file.get("run", "mode"))
        c.mode = parseMode(*v);
    if (auto v = file.get("run", "precision_bits"))
        c.precisionBits = static_cast<unsigned>(integerValue("precision_bits", *v, 1));
    if (auto v = file.get("run", "mu_max"))
        c.muMax = integerValue("mu_max", *v, 0);
    if (auto v = file.get("run", "nu_max"))
        c.nuMax = integerValue("nu_max", *v, 0);
    if (auto v = file.get("run", "pbar_max"))
        c.pbarMax = integerValue("pbar_max", *v, 0);
    if (auto v = file.get("run", "energy_cutoff"))
        c.energyCutoff = rationalValue("energy_cutoff", *v);
    std::vector<Suite> suites;
    for (Suite s : allSuites()) {
        auto v = file.get("run", toString(s));
        if (!v || booleanValue(toString(s), *v))
            suites.push_back(s);
    }
    c.suites = suites;
    if (auto v = file.get("run", "inject_fault"))
        c.injectFault = booleanValue("inject_fault", *v);
    if (auto v = file.get("run", "reference_table"))
        c.referenceTable = *v;

    if (auto v = file.get("output", "directory"))
        c.outputDirectory = *v;
    if (auto v = file.get("output", "prefix"))
        c.prefix = *v;

    validate(c);
    return c;
}

void Overrides::applyTo(ConfigFile& file) const
{
    if (mode)
        file.sections["run"]["mode"] = *mode;
    if (outputDirectory)
        file.sections["output"]["directory"] = *outputDirectory;
    if (prefix)
        file.sections["output"]["prefix"] = *prefix;
    if (suites) {
        std::set<Suite> chosen;
        for (const auto& name : *suites)
            chosen.insert(parseSuite(trim(name)));
        for (Suite s : allSuites())
            file.sections["run"][toString(s)] = chosen.count(s) ? "true" : "false";
    }
}

RunConfig loadRunConfig(const std::string& path, const Overrides& overrides)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    auto file = parseConfigText(text.str());
    overrides.applyTo(file);
    return makeRunConfig(file);
}

void validate(const RunConfig& c)
{
    if (c.prefix.empty() || c.prefix.find('/') != std::string::npos)
        throw ConfigError("prefix: expected a file name without '/'");
    try {
        if (c.mode == Mode::Exact) {
            lissajous::validate(c.exactParams());
        } else {
            if (c.precisionBits < 128)
                throw ConfigError("precision_bits: numeric mode requires at least 128 bits, got " +
                                  std::to_string(c.precisionBits));
            PrecisionScope scope(c.precisionBits);
            lissajous::validate(c.numericParams());
        }
    } catch (const InvalidModel& e) {
        throw ConfigError(std::string("model: ") + e.what());
    }
    if (c.energyCutoff && *c.energyCutoff < 0)
        throw ConfigError("energy_cutoff: expected a non-negative rational");
}

} // namespace lissajous::cli
