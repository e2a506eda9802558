#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cavsim/dynamics.hpp"
#include "cavsim/model.hpp"

// Scenario configuration: JSON loading with a strict schema, validation
// against every module invariant, and the built-in presets.
namespace cavsim::cli {

enum class ModelKind { six_level, molecule_4level };

std::string to_string(ModelKind kind);

// One fully-specified simulation run. Field applicability depends on
// `model`: the coupling schedule and mu belong to six_level; alpha, beta
// and g_mol to molecule_4level. For molecule_4level, omega_el is the
// molecule transition frequency and gamma_out the photon leakage rate
// (0 disables dissipation for either model).
struct ScenarioConfig {
    std::string name;
    ModelKind model = ModelKind::six_level;
    double omega_el = 0.0;
    double omega_c = 0.0;
    bool omega_c_explicit = false;  // false: omega_c follows omega_el / 2
    double mu = 0.0;
    double gamma_out = 0.1;
    model::CouplingSchedule schedule;
    double alpha = 0.0;
    double beta = 0.0;
    double g_mol = 0.0;
    std::string initial_state;
    double dt = 0.0;
    long iterations = 0;
    long record_stride = 10;
    long seed = 0;  // reserved; runs are deterministic
    std::string out_dir;

    // Validates every referenced module invariant; throws ConfigError.
    void validate() const;

    model::ModelParams model_params() const;        // six_level only
    model::MoleculeParams molecule_params() const;  // molecule_4level only
    dynamics::IntegratorConfig integrator_config() const;

    // Atomic-basis index of the molecule_4level initial label.
    int molecule_initial_index() const;
};

// Reads and validates a JSON scenario file. In strict mode unknown keys are
// an error; otherwise they produce a warning on stderr.
ScenarioConfig load_config(const std::filesystem::path& path, bool strict = true);

// Same, from an in-memory JSON document. `source` names the document in
// error messages and is used as the default scenario name.
ScenarioConfig parse_config(const std::string& json_text, const std::string& source,
                            bool strict = true);

std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
ScenarioConfig preset(const std::string& name);

}  // namespace cavsim::cli
