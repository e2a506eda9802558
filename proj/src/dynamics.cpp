#include "cavsim/dynamics.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace cavsim::dynamics {

namespace {

// Blowup guards inside the loop; the tight per-run bounds are asserted by
// the test suites on the recorded diagnostics.
constexpr double kTraceAbortTol = 1e-6;
constexpr double kPositivityAbortTol = 1e-3;

void check_channels(const std::vector<LindbladChannel>& channels, Eigen::Index dim) {
    for (std::size_t j = 0; j < channels.size(); ++j) {
        const LindbladChannel& ch = channels[j];
        if (ch.rate < 0.0 || !std::isfinite(ch.rate)) {
            throw ValidationError("LindbladChannel " + std::to_string(j) + ": rate must be >= 0, got " +
                                  std::to_string(ch.rate));
        }
        if (ch.op.rows() != dim || ch.op.cols() != dim) {
            throw ValidationError("LindbladChannel " + std::to_string(j) + ": operator is " +
                                  std::to_string(ch.op.rows()) + "x" + std::to_string(ch.op.cols()) +
                                  ", state dimension is " + std::to_string(dim));
        }
        if (!qmath::all_finite(ch.op)) {
            throw ValidationError("LindbladChannel " + std::to_string(j) + ": non-finite entries");
        }
    }
}

void check_rate_guard(const std::vector<LindbladChannel>& channels, double dt) {
    for (const LindbladChannel& ch : channels) {
        if (ch.rate * dt > kEulerRateGuard) {
            throw ConfigError("step: rate * dt = " + std::to_string(ch.rate * dt) + " exceeds " +
                              std::to_string(kEulerRateGuard) + "; reduce dt to at most " +
                              std::to_string(kEulerRateGuard / ch.rate));
        }
    }
}

qmath::DensityMatrix step_with_propagator(const qmath::DensityMatrix& rho,
                                          const qmath::ComplexMatrix& u,
                                          const std::vector<LindbladChannel>& channels, double dt) {
    qmath::DensityMatrix rotated = qmath::conjugate(rho, u);
    if (channels.empty()) return rotated;
    return qmath::DensityMatrix::trusted(rotated.matrix() +
                                         lindblad_dissipator(rotated, channels) * dt);
}

qmath::DensityMatrix initial_density(const InitialState& initial, Eigen::Index dim) {
    if (const auto* label = std::get_if<model::BasisLabel>(&initial)) {
        return qmath::DensityMatrix::pure_basis_state(dim, label->index());
    }
    const auto& rho = std::get<qmath::DensityMatrix>(initial);
    if (rho.dim() != dim) {
        throw ValidationError("evolve: initial state dimension " + std::to_string(rho.dim()) +
                              " does not match model dimension " + std::to_string(dim));
    }
    return rho;
}

// Shared stepping loop; `propagator_at(k)` returns U for the step starting
// at t = k * dt.
Trajectory evolve_loop(const std::function<const qmath::ComplexMatrix&(long)>& propagator_at,
                       qmath::DensityMatrix rho, const std::vector<LindbladChannel>& channels,
                       const IntegratorConfig& cfg, int ground_sector_size,
                       const std::optional<qmath::ComplexMatrix>& record_frame) {
    cfg.validate();
    check_channels(channels, rho.dim());
    check_rate_guard(channels, cfg.dt);
    if (ground_sector_size < 1 || ground_sector_size > rho.dim()) {
        throw ValidationError("evolve: ground_sector_size out of range");
    }
    if (record_frame &&
        (record_frame->rows() != rho.dim() || record_frame->cols() != rho.dim())) {
        throw ValidationError("evolve: record_frame dimension mismatch");
    }

    Trajectory traj;
    traj.dim = rho.dim();
    traj.ground_sector_size = ground_sector_size;
    const std::size_t records = static_cast<std::size_t>(cfg.iterations / cfg.record_stride) + 1;
    traj.times.reserve(records);
    traj.probabilities.reserve(records);

    auto record = [&](const qmath::DensityMatrix& state, double t, long iteration) {
        const qmath::ComplexMatrix& m = state.matrix();
        const qmath::DensityDiagnostics diag = qmath::density_diagnostics(state);
        if (!std::isfinite(diag.trace) || std::abs(diag.trace - 1.0) > kTraceAbortTol) {
            throw IntegrationError("trace drifted to " + std::to_string(diag.trace), iteration);
        }
        if (diag.min_eig < -kPositivityAbortTol) {
            throw IntegrationError("state lost positivity, min eigenvalue " +
                                       std::to_string(diag.min_eig),
                                   iteration);
        }
        traj.times.push_back(t);
        std::vector<double> probs(static_cast<std::size_t>(traj.dim));
        if (record_frame) {
            const qmath::ComplexMatrix rotated = (*record_frame) * m * record_frame->adjoint();
            for (Eigen::Index i = 0; i < traj.dim; ++i) probs[i] = rotated(i, i).real();
        } else {
            for (Eigen::Index i = 0; i < traj.dim; ++i) probs[i] = m(i, i).real();
        }
        traj.probabilities.push_back(std::move(probs));
        traj.trace.push_back(diag.trace);
        traj.purity.push_back(diag.purity);
        traj.min_eig.push_back(diag.min_eig);
        traj.herm_defect.push_back(qmath::hermiticity_defect(m));
        double ground = 0.0;
        for (Eigen::Index i = 0; i < ground_sector_size; ++i) ground += m(i, i).real();
        traj.sector_populations.push_back({ground, diag.trace - ground});
    };

    record(rho, 0.0, 0);
    for (long k = 0; k < cfg.iterations; ++k) {
        try {
            rho = step_with_propagator(rho, propagator_at(k), channels, cfg.dt);
        } catch (const IntegrationError&) {
            throw;
        } catch (const Error& e) {
            throw IntegrationError(e.what(), k);
        }
        if ((k + 1) % cfg.record_stride == 0) {
            record(rho, static_cast<double>(k + 1) * cfg.dt, k + 1);
        }
    }
    traj.final_rho = rho.matrix();
    return traj;
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ValidationError("IntegratorConfig: dt must be positive, got " + std::to_string(dt));
    }
    if (iterations < 1) {
        throw ValidationError("IntegratorConfig: need at least one iteration");
    }
    if (record_stride < 1) {
        throw ValidationError("IntegratorConfig: record_stride must be >= 1");
    }
}

qmath::ComplexMatrix lindblad_dissipator(const qmath::DensityMatrix& rho,
                                         const std::vector<LindbladChannel>& channels) {
    check_channels(channels, rho.dim());
    const qmath::ComplexMatrix& m = rho.matrix();
    qmath::ComplexMatrix result = qmath::ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (const LindbladChannel& ch : channels) {
        const qmath::ComplexMatrix jump = ch.op * m * ch.op.adjoint();
        const qmath::ComplexMatrix aa = ch.op.adjoint() * ch.op;
        result += ch.rate * (jump - 0.5 * (m * aa + aa * m));
    }
    return result;
}

qmath::DensityMatrix step(const qmath::DensityMatrix& rho, const qmath::HermitianOperator& h,
                          const std::vector<LindbladChannel>& channels, double dt) {
    check_channels(channels, rho.dim());
    check_rate_guard(channels, dt);
    if (h.dim() != rho.dim()) {
        throw ValidationError("step: Hamiltonian dimension " + std::to_string(h.dim()) +
                              " does not match state dimension " + std::to_string(rho.dim()));
    }
    return step_with_propagator(rho, qmath::unitary_propagator(h, dt), channels, dt);
}

Trajectory evolve(const model::ModelParams& params, const std::vector<LindbladChannel>& channels,
                  const InitialState& initial, const IntegratorConfig& cfg) {
    params.validate();
    qmath::DensityMatrix rho = initial_density(initial, model::kSixLevelDim);
    qmath::ComplexMatrix u;
    auto propagator_at = [&](long k) -> const qmath::ComplexMatrix& {
        const double t = static_cast<double>(k) * cfg.dt;
        u = qmath::unitary_propagator(model::build_six_level_hamiltonian(params, t), cfg.dt);
        return u;
    };
    return evolve_loop(propagator_at, std::move(rho), channels, cfg, 2, std::nullopt);
}

Trajectory evolve_fixed(const qmath::HermitianOperator& h, const qmath::DensityMatrix& initial,
                        const std::vector<LindbladChannel>& channels, const IntegratorConfig& cfg,
                        int ground_sector_size,
                        const std::optional<qmath::ComplexMatrix>& record_frame) {
    if (h.dim() != initial.dim()) {
        throw ValidationError("evolve_fixed: Hamiltonian dimension " + std::to_string(h.dim()) +
                              " does not match state dimension " + std::to_string(initial.dim()));
    }
    cfg.validate();
    const qmath::ComplexMatrix u = qmath::unitary_propagator(h, cfg.dt);
    auto propagator_at = [&u](long) -> const qmath::ComplexMatrix& { return u; };
    return evolve_loop(propagator_at, initial, channels, cfg, ground_sector_size, record_frame);
}

ReactionChannelProbabilities reaction_channel_probabilities(const Trajectory& traj) {
    if (traj.size() == 0) {
        throw ValidationError("reaction_channel_probabilities: empty trajectory");
    }
    if (traj.dim != model::kSixLevelDim) {
        throw ValidationError("reaction_channel_probabilities: defined for six-level trajectories");
    }
    ReactionChannelProbabilities result;
    result.p_bound.reserve(traj.size());
    result.p_dissociated.reserve(traj.size());
    for (const std::vector<double>& row : traj.probabilities) {
        double bound = 0.0;
        double dissociated = 0.0;
        for (int idx = 0; idx < model::kSixLevelDim; ++idx) {
            (model::BasisLabel::from_index(idx).nuc == 0 ? bound : dissociated) += row[idx];
        }
        result.p_bound.push_back(bound);
        result.p_dissociated.push_back(dissociated);
    }
    return result;
}

std::vector<LindbladChannel> photon_channels(const qmath::ComplexMatrix& lowering, double mu,
                                             double gamma_out) {
    if (!(gamma_out > 0.0) || !std::isfinite(gamma_out)) {
        throw ValidationError("photon_channels: gamma_out must be positive, got " +
                              std::to_string(gamma_out));
    }
    if (!(mu >= 0.0 && mu < 1.0)) {
        throw ValidationError("photon_channels: mu must lie in [0, 1), got " + std::to_string(mu));
    }
    std::vector<LindbladChannel> channels;
    channels.push_back({lowering, gamma_out});
    if (mu > 0.0) {
        channels.push_back({lowering.adjoint(), mu * gamma_out});
    }
    return channels;
}

qmath::ComplexMatrix six_level_photon_lowering() {
    qmath::ComplexMatrix a = qmath::ComplexMatrix::Zero(model::kSixLevelDim, model::kSixLevelDim);
    a(0, 4) = 1.0;  // |000><100|
    a(1, 5) = 1.0;  // |001><101|
    return a;
}

std::vector<LindbladChannel> default_channels(const model::ModelParams& params, double gamma_out) {
    params.validate();
    return photon_channels(six_level_photon_lowering(), params.mu, gamma_out);
}

}  // namespace cavsim::dynamics
