#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

using namespace lifshitz::cli;

int main(int argc, char** argv) {
    CLI::App app{"Fidelity susceptibility and holographic complexity for Lifshitz backgrounds", "lifshitz-fidelity"};
    app.set_help_flag("-h,--help", "Show this help and exit");

    std::string subcommand;
    std::string config_path;
    std::map<std::string, std::string> values;
    bool log_spacing = false;

    app.add_option("subcommand", subcommand, "boundary | bulk | match | sweep | verify")->required();
    app.add_option("--config", config_path, "Flat key=value configuration file");
    for (const auto& key : parameter_keys()) app.add_option("--" + key, values[key]);
    app.add_flag("--log", log_spacing, "Logarithmic sweep spacing");
    app.add_option("--out", values["out"], "Directory for output artifacts");
    app.add_option("--format", values["format"], "csv | json");
    app.add_option("--workers", values["workers"], "Sweep worker cap (default LF_WORKERS or hardware threads)");
    app.add_option("--inject-fault", values["inject-fault"], "Perturb one verification check so that it fails");
    app.add_option("--only", values["only"], "Run a single verification check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        RawValues flags;
        for (const auto& [key, value] : values) {
            const auto* opt = app.get_option("--" + key);
            if (opt->count() > 0) flags[key] = value;
        }
        if (log_spacing) flags["spacing"] = "log";
        const RawValues file = config_path.empty() ? RawValues{} : read_config_file(config_path);
        const RunConfig config = resolve(parse_subcommand(subcommand), file, flags);
        return run(config, std::cout, std::cerr);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
