#include "lissajous/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using namespace lissajous::cli;

namespace {

struct CommandOptions {
    std::string config;
    Overrides overrides;
};

void addCommonOptions(CLI::App* sub, CommandOptions& opts, bool withSuites)
{
    sub->add_option("-c,--config", opts.config, "configuration file")->required();
    sub->add_option_function<std::string>(
        "-o,--out", [&opts](const std::string& v) { opts.overrides.outputDirectory = v; }, "output directory");
    sub->add_option_function<std::string>(
        "--prefix", [&opts](const std::string& v) { opts.overrides.prefix = v; }, "output file prefix");
    sub->add_option_function<std::string>(
        "-m,--mode", [&opts](const std::string& v) { opts.overrides.mode = v; }, "exact or numeric");
    if (withSuites)
        sub->add_option_function<std::vector<std::string>>(
               "-s,--suite", [&opts](const std::vector<std::string>& v) { opts.overrides.suites = v; },
               "suites to run: eigen, actions, products, gha, poly, casimir")
            ->delimiter(',');
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification and spectra of Lissajous systems on the sphere"};
    app.require_subcommand(1);

    using Command = std::function<int(const RunConfig&, std::ostream&)>;
    struct Entry {
        const char* name;
        const char* help;
        Command run;
        bool suites;
    };
    const Entry entries[] = {
        {"verify", "check eigenfunctions, actions and algebra relations on a box", cmdVerify, true},
        {"spectrum", "solve the unirrep constraints and write the spectrum table", cmdSpectrum, false},
        {"compare", "audit physical levels against algebraic multiplets", cmdCompare, false},
        {"export", "write spectrum, level and action tables", cmdExport, false},
    };

    CommandOptions opts;
    std::vector<std::pair<CLI::App*, const Entry*>> subs;
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        addCommonOptions(sub, opts, e.suites);
        subs.emplace_back(sub, &e);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return UsageError;
    }

    for (const auto& [sub, entry] : subs) {
        if (!sub->parsed())
            continue;
        RunConfig config;
        try {
            config = loadRunConfig(opts.config, opts.overrides);
        } catch (const lissajous::Error& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return UsageError;
        }
        return entry->run(config, std::cerr);
    }
    return UsageError;
}
