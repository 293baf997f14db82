#include "doctest.h"

#include "lissajous/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace lissajous;
using namespace lissajous::cli;

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    fs::path dir = fs::temp_directory_path() / ("lissajous_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string readText(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeText(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string lastLine(const std::string& text)
{
    std::string t = text;
    while (!t.empty() && t.back() == '\n')
        t.pop_back();
    return t.substr(t.rfind('\n') + 1);
}

std::string modelBlock(const std::string& variant, int m, int n, const std::string& alpha, const std::string& beta,
                       int m1 = 0)
{
    return "[model]\nvariant = " + variant + "\nm = " + std::to_string(m) + "\nn = " + std::to_string(n) +
           "\nalpha = " + alpha + "\nbeta = " + beta + "\nm1 = " + std::to_string(m1) + "\n";
}

RunConfig configFor(const std::string& text, const fs::path& dir)
{
    auto file = parseConfigText(text);
    file.sections["output"]["directory"] = dir.string();
    return makeRunConfig(file);
}

int runTool(const std::string& args)
{
    std::string cmd = std::string(LISSAJOUS_TOOL) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const std::string defaultRun = "[run]\nmode = exact\nmu_max = 4\nnu_max = 4\npbar_max = 2\n";

} // namespace

TEST_CASE("config parsing")
{
    auto file = parseConfigText("# comment\n[model]\nvariant = 2P\nalpha = 3/2\n\n[run]\nmode = numeric\n");
    CHECK((file.get("model", "variant") == std::optional<std::string>("2P")));
    CHECK((file.get("run", "mode") == std::optional<std::string>("numeric")));
    CHECK_FALSE(file.get("output", "prefix"));

    auto commented = parseConfigText("[model]\nvariant = E2   # extended\nalpha = 3/2\t# half-integer\n");
    CHECK((commented.get("model", "variant") == std::optional<std::string>("E2")));
    CHECK((commented.get("model", "alpha") == std::optional<std::string>("3/2")));

    CHECK_THROWS_AS(parseConfigText("variant = 1P\n"), ConfigError);
    CHECK_THROWS_AS(parseConfigText("[modle]\n"), ConfigError);
    CHECK_THROWS_AS(parseConfigText("[model]\ncolour = red\n"), ConfigError);
    CHECK_THROWS_AS(parseConfigText("[model]\nm = 1\nm = 2\n"), ConfigError);
    CHECK_THROWS_AS(parseConfigText("[model]\nm 1\n"), ConfigError);
    CHECK_THROWS_AS(parseConfigText("[run\n"), ConfigError);
}

TEST_CASE("run config invariants")
{
    auto c = makeRunConfig(parseConfigText(modelBlock("2P", 1, 2, "3/2", "5/2") + defaultRun));
    CHECK((c.variant == Variant::TwoParam));
    CHECK(c.n == 2);
    CHECK((c.exactParams().alpha == frac(3, 2)));
    CHECK(c.suites.size() == allSuites().size());

    CHECK_THROWS_AS(makeRunConfig(parseConfigText(modelBlock("1P", 1, 1, "3/0", "1/2"))), ConfigError);
    CHECK_THROWS_AS(makeRunConfig(parseConfigText(modelBlock("1P", 1, 1, "sqrt(2)", "1/2"))), ConfigError);
    CHECK_THROWS_AS(makeRunConfig(parseConfigText(modelBlock("1P", 1, 1, "1.5", "1/2"))), ConfigError);
    CHECK_THROWS_AS(makeRunConfig(parseConfigText(modelBlock("1P", 2, 2, "1", "1/2"))), ConfigError);
    CHECK_THROWS_AS(makeRunConfig(parseConfigText(modelBlock("1P", 1, 1, "1", "1/2") + "[run]\nmu_max = -1\n")),
                    ConfigError);
    CHECK_THROWS_AS(makeRunConfig(parseConfigText("[run]\ninject_fault = yes\n")), ConfigError);

    std::string numeric = modelBlock("2P", 1, 1, "sqrt(2)", "1") + "[run]\nmode = numeric\nprecision_bits = ";
    CHECK_NOTHROW(makeRunConfig(parseConfigText(numeric + "128\n")));
    CHECK_THROWS_AS(makeRunConfig(parseConfigText(numeric + "127\n")), ConfigError);

    auto suites = makeRunConfig(parseConfigText("[run]\ngha = false\ncasimir = false\n")).suites;
    CHECK(suites.size() == allSuites().size() - 2);
}

TEST_CASE("overrides take precedence over the file")
{
    auto file = parseConfigText(modelBlock("1P", 1, 1, "1", "1/2") + "[run]\nmode = numeric\n");
    Overrides o;
    o.mode = "exact";
    o.suites = std::vector<std::string>{"eigen", "poly"};
    o.outputDirectory = "elsewhere";
    o.applyTo(file);
    auto c = makeRunConfig(file);
    CHECK((c.mode == Mode::Exact));
    CHECK((c.suites == std::vector<Suite>{Suite::Eigen, Suite::Poly}));
    CHECK(c.outputPath(".report.txt") == "elsewhere/lissajous.report.txt");

    Overrides bad;
    bad.suites = std::vector<std::string>{"everything"};
    CHECK_THROWS_AS(bad.applyTo(file), ConfigError);
}

TEST_CASE("verify on the default one-parameter config")
{
    auto dir = scratch("verify");
    auto c = configFor(modelBlock("1P", 1, 1, "1", "1/2") + defaultRun, dir);
    std::ostringstream err;
    CHECK(cmdVerify(c, err) == Success);
    std::string report = readText(dir / "lissajous.report.txt");
    CHECK(lastLine(report).rfind("summary: checked=", 0) == 0);
    CHECK(lastLine(report).find("failed=0") != std::string::npos);
    CHECK(report.find("| FAIL") == std::string::npos);
}

TEST_CASE("injected fault fails with the record identified")
{
    auto dir = scratch("fault");
    auto c = configFor(modelBlock("1P", 1, 1, "1", "1/2") + defaultRun + "inject_fault = true\n", dir);
    std::ostringstream err;
    CHECK(cmdVerify(c, err) == CheckFailure);
    CHECK(err.str().find("X+ (injected fault) | (1,0)") != std::string::npos);
    CHECK(lastLine(readText(dir / "lissajous.report.txt")).find("failed=1") != std::string::npos);
}

TEST_CASE("spectrum table of the one-parameter model")
{
    auto dir = scratch("spectrum");
    auto c = configFor(modelBlock("1P", 1, 1, "1", "1/2") + defaultRun, dir);
    std::ostringstream err;
    CHECK(cmdSpectrum(c, err) == Success);
    std::string csv = readText(dir / "lissajous.spectrum.csv");
    CHECK(csv == "variant,branch,rtilde,ptilde,pbar,u,E,dim\n"
                 "1P,u1,1,1,0,3/2,15/4,1\n"
                 "1P,u2,1,1,0,-3/2,15/4,1\n"
                 "1P,u1,1,1,1,3/2,35/4,2\n"
                 "1P,u2,1,1,1,-5/2,35/4,2\n"
                 "1P,u1,1,1,2,3/2,63/4,3\n"
                 "1P,u2,1,1,2,-7/2,63/4,3\n");

    c.pbarMax = 0;
    CHECK(cmdSpectrum(c, err) == Success);
    std::istringstream rows(readText(dir / "lissajous.spectrum.csv"));
    std::string row;
    std::getline(rows, row);
    int count = 0;
    while (std::getline(rows, row)) {
        ++count;
        CHECK(lastLine(row).substr(row.rfind(',') + 1) == "1");
    }
    CHECK(count == 2);
}

TEST_CASE("extended model is isospectral with the two-parameter model")
{
    auto dir = scratch("iso");
    std::ostringstream err;
    auto two = configFor(modelBlock("2P", 1, 1, "2", "2") + "[run]\npbar_max = 1\n[output]\nprefix = two\n", dir);
    auto ext = configFor(modelBlock("E2", 1, 1, "2", "2", 1) + "[run]\npbar_max = 1\n[output]\nprefix = ext\n", dir);
    REQUIRE(cmdSpectrum(two, err) == Success);
    REQUIRE(cmdSpectrum(ext, err) == Success);
    auto energies = [](const std::string& csv) {
        std::vector<std::string> out;
        std::istringstream in(csv);
        std::string row;
        std::getline(in, row);
        while (std::getline(in, row))
            out.push_back(row.substr(row.find(',') + 1));
        return out;
    };
    auto a = energies(readText(dir / "two.spectrum.csv"));
    auto b = energies(readText(dir / "ext.spectrum.csv"));
    CHECK(a.size() == 8);
    CHECK(a == b);
}

TEST_CASE("compare passes for all variants")
{
    auto dir = scratch("compare");
    std::ostringstream err;
    for (const auto& block : {modelBlock("1P", 1, 1, "1", "1/2"), modelBlock("2P", 1, 1, "1", "1"),
                              modelBlock("E2", 1, 1, "2", "2", 1)}) {
        auto c = configFor(block + defaultRun, dir);
        CHECK(cmdCompare(c, err) == Success);
        CHECK(readText(dir / "lissajous.levels.csv").rfind("E,physical,algebraic,multiplets\n", 0) == 0);
    }
}

TEST_CASE("compare with cutoff zero is an empty pass")
{
    auto dir = scratch("cutoff");
    auto c = configFor(modelBlock("1P", 1, 1, "1", "1/2") + defaultRun + "energy_cutoff = 0\n", dir);
    std::ostringstream err;
    CHECK(cmdCompare(c, err) == Success);
    CHECK(readText(dir / "lissajous.levels.csv") == "E,physical,algebraic,multiplets\n");
    CHECK(lastLine(readText(dir / "lissajous.report.txt")) == "summary: checked=0 passed=0 failed=0 skipped=0");

    c.energyCutoff = Rational(1000);
    CHECK(cmdCompare(c, err) == UsageError);
}

TEST_CASE("mismatched reference table fails with a diff")
{
    auto dir = scratch("reference");
    auto c = configFor(modelBlock("1P", 1, 1, "1", "1/2") + defaultRun, dir);
    std::ostringstream err;
    REQUIRE(cmdCompare(c, err) == Success);
    std::string table = readText(dir / "lissajous.levels.csv");

    writeText(dir / "good.csv", table);
    c.referenceTable = (dir / "good.csv").string();
    CHECK(cmdCompare(c, err) == Success);

    std::string edited = table;
    edited.replace(edited.find("35/4,2,2,2"), 10, "35/4,2,3,2");
    writeText(dir / "bad.csv", edited);
    c.referenceTable = (dir / "bad.csv").string();
    std::ostringstream diffErr;
    CHECK(cmdCompare(c, diffErr) == CheckFailure);
    CHECK(diffErr.str().find("line 3 - 35/4,2,3,2") != std::string::npos);
    CHECK(diffErr.str().find("line 3 + 35/4,2,2,2") != std::string::npos);

    CHECK(tableDiff("a\nb\n", "a\nb\n").empty());
    CHECK(tableDiff("a\n", "a\nc\n") == std::vector<std::string>{"line 2 + c"});
}

TEST_CASE("commands requiring exact mode reject numeric configs")
{
    auto dir = scratch("numeric");
    auto c = configFor(modelBlock("2P", 1, 1, "sqrt(2)", "1") + "[run]\nmode = numeric\n", dir);
    std::ostringstream err;
    CHECK(cmdSpectrum(c, err) == UsageError);
    CHECK(cmdCompare(c, err) == UsageError);
    CHECK(cmdExport(c, err) == UsageError);
}

TEST_CASE("outputs are byte-identical across runs")
{
    auto dir = scratch("determinism");
    auto c = configFor(modelBlock("E2", 1, 1, "2", "2", 1) + defaultRun, dir);
    std::ostringstream err;
    std::vector<std::string> suffixes = {".report.txt", ".spectrum.csv", ".levels.csv", ".actions.csv"};
    REQUIRE(cmdExport(c, err) == Success);
    std::vector<std::string> first;
    for (const auto& s : suffixes)
        first.push_back(readText(dir / ("lissajous" + s)));
    REQUIRE(cmdExport(c, err) == Success);
    for (std::size_t i = 0; i < suffixes.size(); ++i)
        CHECK(readText(dir / ("lissajous" + suffixes[i])) == first[i]);

    REQUIRE(cmdVerify(c, err) == Success);
    std::string report = readText(dir / "lissajous.report.txt");
    REQUIRE(cmdVerify(c, err) == Success);
    CHECK(readText(dir / "lissajous.report.txt") == report);
}

TEST_CASE("tool exit codes")
{
    auto dir = scratch("tool");
    std::string base = modelBlock("1P", 1, 1, "1", "1/2") + defaultRun;
    writeText(dir / "good.conf", base);
    writeText(dir / "malformed.conf", modelBlock("1P", 1, 1, "3/0", "1/2") + defaultRun);
    writeText(dir / "fault.conf", base + "inject_fault = true\n");
    writeText(dir / "lowbits.conf",
              modelBlock("2P", 1, 1, "sqrt(2)", "1") + "[run]\nmode = numeric\nprecision_bits = 64\n");
    std::string out = " --out " + (dir / "out").string();

    CHECK(runTool("verify -c " + (dir / "good.conf").string() + out) == 0);
    CHECK(runTool("verify -c " + (dir / "good.conf").string() + out + " --suite eigen,actions") == 0);
    CHECK(runTool("verify -c " + (dir / "fault.conf").string() + out) == 1);
    CHECK(runTool("verify -c " + (dir / "malformed.conf").string() + out) == 2);
    CHECK(runTool("verify -c " + (dir / "lowbits.conf").string() + out) == 2);
    CHECK(runTool("verify -c " + (dir / "missing.conf").string() + out) == 2);
    CHECK(runTool("verify -c " + (dir / "good.conf").string() + out + " --suite nonsense") == 2);
    CHECK(runTool("verify -c " + (dir / "good.conf").string() + out + " --mode sideways") == 2);
    CHECK(runTool("spectrum -c " + (dir / "good.conf").string() + out) == 0);
    CHECK(runTool("compare -c " + (dir / "good.conf").string() + out) == 0);
    CHECK(runTool("export -c " + (dir / "good.conf").string() + out) == 0);
    CHECK(runTool("frobnicate") == 2);
    CHECK(runTool("verify") == 2);
    CHECK(runTool("--help") == 0);
}
