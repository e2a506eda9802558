#include "cavsim/cli.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cavsim/config.hpp"
#include "cavsim/scenario.hpp"

namespace cavsim::cli {

namespace {

struct CommonFlags {
    std::string out_dir;
    long stride = 0;
    bool no_plot = false;

    OutputOptions options() const {
        OutputOptions opts;
        if (!out_dir.empty()) opts.out_dir = out_dir;
        if (stride > 0) opts.record_stride = stride;
        opts.write_plot = !no_plot;
        return opts;
    }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--out-dir", flags.out_dir, "Output directory (default: config, then $CAVSIM_OUT_DIR)");
    cmd->add_option("--stride", flags.stride, "Override the recording stride")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-plot", flags.no_plot, "Skip the SVG plot");
}

void report_run(const RunResult& result) {
    std::cout << "wrote " << result.csv_path.string() << " (" << result.trajectory.size()
              << " rows)";
    if (!result.svg_path.empty()) std::cout << " and " << result.svg_path.string();
    std::cout << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Open-system simulator for a diatomic molecular ion in a cavity"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Run a scenario from a JSON config file");
    std::string config_path;
    bool allow_unknown = false;
    run_cmd->add_option("config", config_path, "Scenario JSON file")->required();
    run_cmd->add_flag("--allow-unknown-keys", allow_unknown,
                      "Warn about unknown config keys instead of failing");
    CommonFlags run_flags;
    add_common_flags(run_cmd, run_flags);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a scenario once per value of one parameter");
    std::string sweep_config_path;
    std::string axis;
    std::vector<std::string> values;
    bool sweep_allow_unknown = false;
    sweep_cmd->add_option("config", sweep_config_path, "Base scenario JSON file")->required();
    sweep_cmd->add_option("--axis", axis, "Parameter to vary: omega_el, mu, gamma_out, decay_rate, initial_state")
        ->required();
    sweep_cmd->add_option("--values", values, "Comma-separated list of values")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_flag("--allow-unknown-keys", sweep_allow_unknown,
                        "Warn about unknown config keys instead of failing");
    CommonFlags sweep_flags;
    add_common_flags(sweep_cmd, sweep_flags);

    // presets
    auto* presets_cmd = app.add_subcommand("presets", "Built-in scenario presets");
    presets_cmd->require_subcommand(1);
    auto* presets_list = presets_cmd->add_subcommand("list", "List preset names");
    auto* presets_run = presets_cmd->add_subcommand("run", "Run a preset (or \"all\")");
    std::string preset_name;
    presets_run->add_option("name", preset_name, "Preset name from `presets list`, or all")
        ->required();
    CommonFlags preset_flags;
    add_common_flags(presets_run, preset_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run_cmd->parsed()) {
            report_run(run_scenario(load_config(config_path, !allow_unknown),
                                    run_flags.options()));
        } else if (sweep_cmd->parsed()) {
            const SweepResult result =
                run_sweep(load_config(sweep_config_path, !sweep_allow_unknown), axis, values,
                          sweep_flags.options());
            for (const auto& path : result.run_csv_paths) {
                std::cout << "wrote " << path.string() << "\n";
            }
            std::cout << "wrote " << result.summary_path.string() << "\n";
        } else if (presets_list->parsed()) {
            for (const std::string& name : preset_names()) {
                const ScenarioConfig cfg = preset(name);
                std::cout << name << "  " << to_string(cfg.model) << "  omega_el=" << cfg.omega_el
                          << "  initial=" << cfg.initial_state << "  iterations=" << cfg.iterations
                          << "\n";
            }
        } else if (presets_run->parsed()) {
            if (preset_name == "all") {
                for (const std::string& name : preset_names()) {
                    report_run(run_scenario(preset(name), preset_flags.options()));
                }
            } else {
                report_run(run_scenario(preset(preset_name), preset_flags.options()));
            }
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IntegrationError& e) {
        std::cerr << "integration error: " << e.what() << "\n";
        return kExitIntegration;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

}  // namespace cavsim::cli
