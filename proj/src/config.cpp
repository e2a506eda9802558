#include "cavsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cavsim::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kMoleculeLabels = {"0O", "1O", "0H", "1H"};

// Tracks consumed keys so leftovers can be reported against the schema.
class ObjectReader {
public:
    ObjectReader(const json& obj, std::string context) : obj_(obj), context_(std::move(context)) {
        if (!obj_.is_object()) {
            throw ConfigError(context_ + ": expected a JSON object");
        }
    }

    bool has(const std::string& key) const { return obj_.contains(key); }

    double number(const std::string& key) {
        const json& v = fetch(key);
        if (!v.is_number()) {
            throw ConfigError(path(key) + ": expected a number");
        }
        return v.get<double>();
    }

    double number_or(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    long integer(const std::string& key) {
        const json& v = fetch(key);
        if (!v.is_number_integer()) {
            throw ConfigError(path(key) + ": expected an integer");
        }
        return v.get<long>();
    }

    long integer_or(const std::string& key, long fallback) {
        return has(key) ? integer(key) : fallback;
    }

    std::string string(const std::string& key) {
        const json& v = fetch(key);
        if (!v.is_string()) {
            throw ConfigError(path(key) + ": expected a string");
        }
        return v.get<std::string>();
    }

    std::string string_or(const std::string& key, const std::string& fallback) {
        return has(key) ? string(key) : fallback;
    }

    const json& object(const std::string& key) {
        const json& v = fetch(key);
        if (!v.is_object()) {
            throw ConfigError(path(key) + ": expected an object");
        }
        return v;
    }

    void require(const std::string& key) const {
        if (!has(key)) {
            throw ConfigError(path(key) + ": required key is missing");
        }
    }

    // Unknown keys: error in strict mode, stderr warning otherwise.
    void finish(bool strict) const {
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (consumed_.count(it.key())) continue;
            if (strict) {
                throw ConfigError(path(it.key()) +
                                  ": unknown key (pass --allow-unknown-keys to ignore)");
            }
            std::cerr << "warning: " << path(it.key()) << ": unknown key ignored\n";
        }
    }

    std::string path(const std::string& key) const { return context_ + "." + key; }

private:
    const json& fetch(const std::string& key) {
        require(key);
        consumed_.insert(key);
        return obj_.at(key);
    }

    const json& obj_;
    std::string context_;
    std::set<std::string> consumed_;
};

model::CouplingSchedule parse_schedule(const json& obj, const std::string& context, bool strict) {
    ObjectReader r(obj, context);
    model::CouplingSchedule s;
    s.g_el_0 = r.number("g_el_0");
    s.g_el_1 = r.number("g_el_1");
    s.g_c0_amplitude = r.number("g_c0_amplitude");
    s.g0 = r.number_or("g0", 0.0);
    s.m_ev = r.number_or("m_ev", 0.0);
    if (r.has("g_c1_amplitude")) {
        s.g_c1_amplitude = r.number("g_c1_amplitude");
    } else {
        if (!(s.g0 > 0.0) || !(s.m_ev > 0.0)) {
            throw ConfigError(r.path("g_c1_amplitude") +
                              ": missing; give it directly or provide positive g0 and m_ev");
        }
        s.g_c1_amplitude = model::effective_phonon_coupling(s.g0, s.m_ev);
    }
    s.decay_rate = r.number("decay_rate");
    s.dominance_ratio = r.number_or("dominance_ratio", 100.0);
    r.finish(strict);
    return s;
}

}  // namespace

std::string to_string(ModelKind kind) {
    return kind == ModelKind::six_level ? "six_level" : "molecule_4level";
}

void ScenarioConfig::validate() const {
    try {
        if (name.empty()) {
            throw ValidationError("scenario name must not be empty");
        }
        integrator_config().validate();
        if (gamma_out < 0.0 || !std::isfinite(gamma_out)) {
            throw ValidationError("gamma_out must be nonnegative and finite");
        }
        if (gamma_out * dt > dynamics::kEulerRateGuard) {
            throw ValidationError("gamma_out * dt = " + std::to_string(gamma_out * dt) +
                                  " exceeds the Euler guard " +
                                  std::to_string(dynamics::kEulerRateGuard) +
                                  "; reduce dt or gamma_out");
        }
        if (model == ModelKind::six_level) {
            model_params().validate();
            model::BasisLabel::parse(initial_state);
        } else {
            molecule_params();
            molecule_initial_index();
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("scenario \"" + name + "\": " + e.what());
    }
}

model::ModelParams ScenarioConfig::model_params() const {
    if (model != ModelKind::six_level) {
        throw ConfigError("scenario \"" + name + "\": not a six_level configuration");
    }
    model::ModelParams p;
    p.omega_el = omega_el;
    p.omega_c = omega_c_explicit ? omega_c : omega_el / 2.0;
    p.mu = mu;
    p.schedule = schedule;
    return p;
}

model::MoleculeParams ScenarioConfig::molecule_params() const {
    if (model != ModelKind::molecule_4level) {
        throw ConfigError("scenario \"" + name + "\": not a molecule_4level configuration");
    }
    return model::MoleculeParams(omega_el, g_mol, alpha, beta);
}

dynamics::IntegratorConfig ScenarioConfig::integrator_config() const {
    dynamics::IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.iterations = iterations;
    cfg.record_stride = record_stride;
    return cfg;
}

int ScenarioConfig::molecule_initial_index() const {
    if (initial_state == "0O") return 0;
    if (initial_state == "1O") return 1;
    if (initial_state == "0H") return 2;
    if (initial_state == "1H") return 3;
    throw ValidationError("initial_state \"" + initial_state +
                          "\" is not one of 0O, 1O, 0H, 1H");
}

ScenarioConfig parse_config(const std::string& json_text, const std::string& source, bool strict) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ": " + e.what());
    }
    ObjectReader r(doc, source);
    ScenarioConfig cfg;
    cfg.name = r.string_or("name", source);

    const std::string model_name = r.string_or("model", "six_level");
    if (model_name == "six_level") {
        cfg.model = ModelKind::six_level;
    } else if (model_name == "molecule_4level") {
        cfg.model = ModelKind::molecule_4level;
    } else {
        throw ConfigError(r.path("model") + ": expected six_level or molecule_4level, got \"" +
                          model_name + "\"");
    }

    cfg.omega_el = r.number("omega_el");
    if (r.has("omega_c")) {
        cfg.omega_c = r.number("omega_c");
        cfg.omega_c_explicit = true;
    } else {
        cfg.omega_c = cfg.omega_el / 2.0;
    }
    cfg.gamma_out = r.number_or("gamma_out", 0.1);
    cfg.initial_state = r.string("initial_state");
    cfg.dt = r.number("dt");
    cfg.iterations = r.integer("iterations");
    cfg.record_stride = r.integer_or("record_stride", 10);
    cfg.seed = r.integer_or("seed", 0);
    cfg.out_dir = r.string_or("out_dir", "");

    if (cfg.model == ModelKind::six_level) {
        cfg.mu = r.number("mu");
        cfg.schedule = parse_schedule(r.object("schedule"), r.path("schedule"), strict);
    } else {
        cfg.alpha = r.number("alpha");
        cfg.beta = r.number("beta");
        cfg.g_mol = r.number("g_mol");
    }
    r.finish(strict);
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path, bool strict) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ScenarioConfig cfg = parse_config(buffer.str(), path.stem().string(), strict);
    return cfg;
}

namespace {

ScenarioConfig six_level_preset(const std::string& name, double omega_el,
                                const std::string& initial) {
    ScenarioConfig cfg;
    cfg.name = name;
    cfg.model = ModelKind::six_level;
    cfg.omega_el = omega_el;
    cfg.omega_c = omega_el / 2.0;
    cfg.omega_c_explicit = false;
    cfg.mu = 0.4;
    cfg.gamma_out = 0.1;
    cfg.schedule.g_el_0 = 6e7;
    cfg.schedule.g_el_1 = 6e4;
    cfg.schedule.g0 = 4.0;
    cfg.schedule.m_ev = 1e6;
    cfg.schedule.g_c1_amplitude = model::effective_phonon_coupling(4.0, 1e6);
    cfg.schedule.g_c0_amplitude = 4.0;
    cfg.schedule.decay_rate = 0.1;
    cfg.initial_state = initial;
    cfg.dt = 0.01;
    cfg.iterations = 6000;
    cfg.record_stride = 10;
    return cfg;
}

ScenarioConfig molecule_preset(const std::string& name, double gamma_out, long iterations,
                               long record_stride) {
    ScenarioConfig cfg;
    cfg.name = name;
    cfg.model = ModelKind::molecule_4level;
    cfg.omega_el = 4.0;
    cfg.omega_c = 2.0;
    cfg.omega_c_explicit = false;
    cfg.gamma_out = gamma_out;
    cfg.g_mol = 0.5;
    cfg.alpha = std::sqrt(0.8);
    cfg.beta = std::sqrt(0.2);
    cfg.initial_state = "0O";
    cfg.dt = 0.01;
    cfg.iterations = iterations;
    cfg.record_stride = record_stride;
    return cfg;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

bool is_preset(const std::string& name) {
    const std::vector<std::string> names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ScenarioConfig preset(const std::string& name) {
    // fig1/fig2: low frequency, fig3/fig4: intermediate, fig5/fig6: high;
    // odd presets start bound (|010>), even ones dissociated (|011>).
    if (name == "fig1") return six_level_preset(name, 0.4, "010");
    if (name == "fig2") return six_level_preset(name, 0.4, "011");
    if (name == "fig3") return six_level_preset(name, 4.0, "010");
    if (name == "fig4") return six_level_preset(name, 4.0, "011");
    if (name == "fig5") return six_level_preset(name, 400.0, "010");
    if (name == "fig6") return six_level_preset(name, 400.0, "011");
    // fig7: closed four-level run; fig8: with photon leakage, long horizon.
    if (name == "fig7") return molecule_preset(name, 0.0, 10000, 10);
    if (name == "fig8") return molecule_preset(name, 0.1, 200000, 200);
    throw ConfigError("unknown preset \"" + name + "\"; available: fig1..fig8");
}

}  // namespace cavsim::cli
