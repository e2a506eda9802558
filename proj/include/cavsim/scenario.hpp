#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cavsim/config.hpp"
#include "cavsim/dynamics.hpp"

// Executes validated scenarios: trajectory integration, CSV and SVG
// emission, and multi-value parameter sweeps with per-run summaries.
namespace cavsim::cli {

struct OutputOptions {
    std::optional<std::string> out_dir;     // CLI flag, wins over everything
    std::optional<long> record_stride;      // CLI flag override
    bool write_plot = true;
};

// Precedence: CLI flag, config out_dir, CAVSIM_OUT_DIR, current directory.
std::filesystem::path resolve_out_dir(const OutputOptions& opts, const ScenarioConfig& cfg);

struct RunResult {
    dynamics::Trajectory trajectory;
    std::filesystem::path csv_path;
    std::filesystem::path svg_path;  // empty when plotting is disabled
};

RunResult run_scenario(const ScenarioConfig& cfg, const OutputOptions& opts);

// max - min of p_bound over the trailing half of the recorded rows.
double oscillation_amplitude(const std::vector<double>& p_bound);

inline const std::vector<std::string> kSweepAxes = {"omega_el", "mu", "gamma_out", "decay_rate",
                                                    "initial_state"};

struct SweepResult {
    std::filesystem::path summary_path;
    std::vector<std::filesystem::path> run_csv_paths;
};

// Runs the base six-level scenario once per axis value (workers run
// concurrently; outputs are per-run files) and writes a summary CSV with
// final reaction-channel probabilities and the oscillation metric. All
// values are validated before any run starts.
SweepResult run_sweep(const ScenarioConfig& base, const std::string& axis,
                      const std::vector<std::string>& values, const OutputOptions& opts);

}  // namespace cavsim::cli
