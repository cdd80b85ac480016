// infoacq: tables and checks for the costly information acquisition model.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "infoacq/cli_io.hpp"

int main(int argc, char** argv) {
    using namespace infoacq;

    CLI::App app{"Costly information acquisition: cost functions, belief sets and patterns"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> draws;
    std::string format = "csv";
    std::string out_path;
    std::optional<double> tolerance;
    std::vector<std::string> overrides;

    app.add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "Monte Carlo seed (overrides config)");
    app.add_option("--draws", draws, "Monte Carlo draws (overrides config)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write the table here instead of stdout");
    app.add_option("--tolerance", tolerance, "tolerance for golden values / theorem checks");
    app.add_option("--set", overrides, "override a config key, e.g. --set cost=0.25");

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const CommandContext&);
    };
    const std::vector<Command> commands{
        {"wtp", "willingness to pay after each first component over a prior sweep", cmd_wtp},
        {"partition", "case intervals of the prior space", cmd_partition},
        {"sets", "B/V pair memberships over a prior grid for each cost", cmd_sets},
        {"example", "replay the introductory two-agent example", cmd_example},
        {"polarize", "pairwise outcome for the configured priors under each signal", cmd_polarize},
        {"simulate", "Monte Carlo pattern frequencies", cmd_simulate},
        {"verify", "grid theorem checks and Monte Carlo consistency", cmd_verify},
    };
    for (const auto& c : commands) app.add_subcommand(c.name, c.help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    std::ofstream file;
    CommandContext ctx{RunConfig{}, parse_format(format), tolerance, &std::cout, &std::cerr};
    try {
        if (!config_path.empty()) ctx.config = load_config(config_path);
        for (const auto& o : overrides) apply_override(ctx.config, o);
        if (seed) ctx.config.seed = *seed;
        if (draws) ctx.config.draws = *draws;
        ctx.config.validate();
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitInvalid;
            }
            ctx.out = &file;
        }
        for (const auto& c : commands) {
            if (app.got_subcommand(c.name)) return c.run(ctx);
        }
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
