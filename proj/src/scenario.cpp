#include "cavsim/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <future>

#include "cavsim/analytic.hpp"
#include "cavsim/output.hpp"

namespace cavsim::cli {

namespace {

std::string sanitize_for_filename(const std::string& text) {
    std::string result = text;
    for (char& c : result) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
                        c == '_';
        if (!ok) c = '-';
    }
    return result;
}

output::Table six_level_table(const dynamics::Trajectory& traj,
                              const dynamics::ReactionChannelProbabilities& rcp) {
    output::Table table;
    table.header = {"t",    "p000", "p001",  "p010",   "p011",    "p100",
                    "p101", "trace", "purity", "p_bound", "p_dissociated"};
    table.rows.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        std::vector<std::string> row;
        row.reserve(table.header.size());
        row.push_back(output::format_value(traj.times[k]));
        for (int i = 0; i < model::kSixLevelDim; ++i) {
            row.push_back(output::format_value(traj.probabilities[k][i]));
        }
        row.push_back(output::format_value(traj.trace[k]));
        row.push_back(output::format_value(traj.purity[k]));
        row.push_back(output::format_value(rcp.p_bound[k]));
        row.push_back(output::format_value(rcp.p_dissociated[k]));
        table.rows.push_back(std::move(row));
    }
    return table;
}

output::Table molecule_table(const dynamics::Trajectory& traj, const model::MoleculeParams& mp) {
    output::Table table;
    table.header = {"t",     "p0O",    "p1O",              "p0H",
                    "p1H",   "trace",  "purity",           "p_oxygen_numeric",
                    "p_oxygen_analytic"};
    table.rows.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        std::vector<std::string> row;
        row.reserve(table.header.size());
        row.push_back(output::format_value(traj.times[k]));
        for (int i = 0; i < 4; ++i) {
            row.push_back(output::format_value(traj.probabilities[k][i]));
        }
        row.push_back(output::format_value(traj.trace[k]));
        row.push_back(output::format_value(traj.purity[k]));
        row.push_back(output::format_value(traj.probabilities[k][0] + traj.probabilities[k][1]));
        row.push_back(output::format_value(analytic::p_oxygen(mp, traj.times[k])));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<output::PlotSeries> population_series(const dynamics::Trajectory& traj,
                                                  const std::vector<std::string>& labels) {
    std::vector<output::PlotSeries> series(labels.size());
    for (std::size_t s = 0; s < labels.size(); ++s) {
        series[s].label = labels[s];
        series[s].values.reserve(traj.size());
        for (std::size_t k = 0; k < traj.size(); ++k) {
            series[s].values.push_back(traj.probabilities[k][s]);
        }
    }
    return series;
}

double parse_number(const std::string& text, const std::string& what) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw ConfigError(what + ": \"" + text + "\" is not a number");
    }
    if (consumed != text.size()) {
        throw ConfigError(what + ": \"" + text + "\" is not a number");
    }
    return value;
}

ScenarioConfig apply_axis_value(const ScenarioConfig& base, const std::string& axis,
                                const std::string& value) {
    ScenarioConfig cfg = base;
    cfg.name = base.name + "_" + axis + "_" + sanitize_for_filename(value);
    const std::string what = "sweep axis " + axis;
    if (axis == "omega_el") {
        cfg.omega_el = parse_number(value, what);
        // omega_c keeps tracking omega_el / 2 unless it was explicit.
    } else if (axis == "mu") {
        cfg.mu = parse_number(value, what);
    } else if (axis == "gamma_out") {
        cfg.gamma_out = parse_number(value, what);
    } else if (axis == "decay_rate") {
        cfg.schedule.decay_rate = parse_number(value, what);
    } else if (axis == "initial_state") {
        cfg.initial_state = value;
    } else {
        throw ConfigError("unknown sweep axis \"" + axis + "\"");
    }
    cfg.validate();
    return cfg;
}

}  // namespace

std::filesystem::path resolve_out_dir(const OutputOptions& opts, const ScenarioConfig& cfg) {
    if (opts.out_dir && !opts.out_dir->empty()) return *opts.out_dir;
    if (!cfg.out_dir.empty()) return cfg.out_dir;
    if (const char* env = std::getenv("CAVSIM_OUT_DIR"); env && *env) return env;
    return ".";
}

double oscillation_amplitude(const std::vector<double>& p_bound) {
    if (p_bound.empty()) {
        throw ValidationError("oscillation_amplitude: empty series");
    }
    const std::size_t start = p_bound.size() / 2;
    const auto [lo, hi] = std::minmax_element(p_bound.begin() + start, p_bound.end());
    return *hi - *lo;
}

RunResult run_scenario(const ScenarioConfig& cfg, const OutputOptions& opts) {
    ScenarioConfig effective = cfg;
    if (opts.record_stride) effective.record_stride = *opts.record_stride;
    effective.validate();

    const std::filesystem::path out_dir = resolve_out_dir(opts, effective);
    RunResult result;
    output::Table table;
    std::vector<output::PlotSeries> series;

    if (effective.model == ModelKind::six_level) {
        const model::ModelParams params = effective.model_params();
        std::vector<dynamics::LindbladChannel> channels;
        if (effective.gamma_out > 0.0) {
            channels = dynamics::default_channels(params, effective.gamma_out);
        }
        result.trajectory =
            dynamics::evolve(params, channels, model::BasisLabel::parse(effective.initial_state),
                             effective.integrator_config());
        const auto rcp = dynamics::reaction_channel_probabilities(result.trajectory);
        table = six_level_table(result.trajectory, rcp);
        series = population_series(result.trajectory,
                                   {"p000", "p001", "p010", "p011", "p100", "p101"});
    } else {
        const model::MoleculeParams mp = effective.molecule_params();
        const qmath::HermitianOperator h = model::build_jc_hamiltonian(mp.omega, mp.g_mol, false);
        std::vector<dynamics::LindbladChannel> channels;
        if (effective.gamma_out > 0.0) {
            channels = dynamics::photon_channels(model::jc_photon_lowering(), 0.0,
                                                 effective.gamma_out);
        }
        const Eigen::Matrix4d frame = analytic::atomic_frame(mp);
        Eigen::Vector4cd psi0 = frame.row(effective.molecule_initial_index())
                                    .transpose()
                                    .cast<qmath::Complex>();
        qmath::DensityMatrix rho0(psi0 * psi0.adjoint());
        result.trajectory = dynamics::evolve_fixed(h, rho0, channels, effective.integrator_config(),
                                                   1, frame.cast<qmath::Complex>());
        table = molecule_table(result.trajectory, mp);
        series = population_series(result.trajectory, {"p0O", "p1O", "p0H", "p1H"});
        output::PlotSeries p_ox;
        p_ox.label = "p_oxygen";
        for (std::size_t k = 0; k < result.trajectory.size(); ++k) {
            p_ox.values.push_back(result.trajectory.probabilities[k][0] +
                                  result.trajectory.probabilities[k][1]);
        }
        series.push_back(std::move(p_ox));
    }

    result.csv_path = out_dir / (effective.name + ".csv");
    output::write_csv(result.csv_path, table);
    if (opts.write_plot) {
        result.svg_path = out_dir / (effective.name + ".svg");
        output::write_line_plot(result.svg_path, effective.name + " populations",
                                result.trajectory.times, series);
    }
    return result;
}

SweepResult run_sweep(const ScenarioConfig& base, const std::string& axis,
                      const std::vector<std::string>& values, const OutputOptions& opts) {
    base.validate();
    if (base.model != ModelKind::six_level) {
        throw ConfigError("sweep summaries are defined for six_level scenarios only");
    }
    if (std::find(kSweepAxes.begin(), kSweepAxes.end(), axis) == kSweepAxes.end()) {
        std::string allowed;
        for (const auto& a : kSweepAxes) allowed += (allowed.empty() ? "" : ", ") + a;
        throw ConfigError("unknown sweep axis \"" + axis + "\"; allowed: " + allowed);
    }
    if (values.empty()) {
        throw ConfigError("sweep needs at least one value");
    }

    // Validate every run before starting any of them.
    std::vector<ScenarioConfig> runs;
    runs.reserve(values.size());
    for (const std::string& value : values) {
        runs.push_back(apply_axis_value(base, axis, value));
    }

    std::vector<std::future<RunResult>> futures;
    futures.reserve(runs.size());
    for (const ScenarioConfig& run : runs) {
        futures.push_back(
            std::async(std::launch::async, [run, &opts]() { return run_scenario(run, opts); }));
    }
    std::vector<RunResult> results;
    results.reserve(futures.size());
    std::exception_ptr first_error;
    for (auto& future : futures) {
        try {
            results.push_back(future.get());
        } catch (...) {
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    output::Table summary;
    summary.header = {"value", "final_p_bound", "final_p_dissociated", "oscillation_amplitude"};
    SweepResult sweep;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto rcp = dynamics::reaction_channel_probabilities(results[i].trajectory);
        summary.rows.push_back({values[i], output::format_value(rcp.p_bound.back()),
                                output::format_value(rcp.p_dissociated.back()),
                                output::format_value(oscillation_amplitude(rcp.p_bound))});
        sweep.run_csv_paths.push_back(results[i].csv_path);
    }
    sweep.summary_path = resolve_out_dir(opts, base) / (base.name + "_sweep_" + axis + ".csv");
    output::write_csv(sweep.summary_path, summary);
    return sweep;
}

}  // namespace cavsim::cli
