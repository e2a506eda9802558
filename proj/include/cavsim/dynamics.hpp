#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "cavsim/model.hpp"
#include "cavsim/qmath.hpp"

// Dissipative time evolution: the Lindblad dissipator, the two-step split
// integrator (exact unitary conjugation followed by one Euler increment of
// the dissipator), trajectory recording, and reaction-channel probability
// extraction.
namespace cavsim::dynamics {

// Stepping refuses rates with rate * dt above this; the Euler increment of
// the dissipator is only trustworthy for small rate * dt.
inline constexpr double kEulerRateGuard = 0.1;

// Jump operator with its nonnegative rate.
struct LindbladChannel {
    qmath::ComplexMatrix op;
    double rate = 0.0;
};

struct IntegratorConfig {
    double dt = 0.0;
    long iterations = 0;
    long record_stride = 10;

    void validate() const;
};

// Recorded time series of basis populations plus per-sample diagnostics.
// `ground_sector_size` is the number of leading basis states in the
// zero-excitation block; sector_populations[k] = {that block, the rest}.
struct Trajectory {
    Eigen::Index dim = 0;
    int ground_sector_size = 1;
    std::vector<double> times;
    std::vector<std::vector<double>> probabilities;
    std::vector<double> trace;
    std::vector<double> purity;
    std::vector<double> min_eig;
    std::vector<double> herm_defect;
    std::vector<std::array<double, 2>> sector_populations;
    qmath::ComplexMatrix final_rho;

    std::size_t size() const { return times.size(); }
};

// L(rho) = sum_j rate_j (A_j rho A_j^dag - (rho A_j^dag A_j + A_j^dag A_j rho) / 2).
// Hermitian and traceless by construction.
qmath::ComplexMatrix lindblad_dissipator(const qmath::DensityMatrix& rho,
                                         const std::vector<LindbladChannel>& channels);

// One step of the split scheme:
//   rho' = exp(-i H dt) rho exp(i H dt);  rho(t+dt) = rho' + L(rho') dt.
qmath::DensityMatrix step(const qmath::DensityMatrix& rho, const qmath::HermitianOperator& h,
                          const std::vector<LindbladChannel>& channels, double dt);

using InitialState = std::variant<model::BasisLabel, qmath::DensityMatrix>;

// Evolves the six-level model, rebuilding H at the start of each step
// (t = iteration * dt) so the coupling decay is tracked. Records every
// record_stride steps, including t = 0.
Trajectory evolve(const model::ModelParams& params, const std::vector<LindbladChannel>& channels,
                  const InitialState& initial, const IntegratorConfig& cfg);

// Same loop for a time-independent Hamiltonian (the propagator is computed
// once). If `record_frame` is given, recorded populations are diag(R rho
// R^dag) — used to report the four-level state in the atomic basis while
// evolving in the energy basis. Sector populations always refer to the
// evolution basis.
Trajectory evolve_fixed(const qmath::HermitianOperator& h, const qmath::DensityMatrix& initial,
                        const std::vector<LindbladChannel>& channels, const IntegratorConfig& cfg,
                        int ground_sector_size = 1,
                        const std::optional<qmath::ComplexMatrix>& record_frame = std::nullopt);

struct ReactionChannelProbabilities {
    std::vector<double> p_bound;        // nuc = 0 populations
    std::vector<double> p_dissociated;  // nuc = 1 populations
};

ReactionChannelProbabilities reaction_channel_probabilities(const Trajectory& traj);

// Photon loss {A, gamma_out} plus, for mu > 0, the pump {A^dag, mu * gamma_out}.
std::vector<LindbladChannel> photon_channels(const qmath::ComplexMatrix& lowering, double mu,
                                             double gamma_out);

// The six-level photon lowering operator sum |0,el,nuc><1,el,nuc|.
qmath::ComplexMatrix six_level_photon_lowering();

// Loss + pump channels of the six-level model, with gamma_in = mu * gamma_out.
std::vector<LindbladChannel> default_channels(const model::ModelParams& params, double gamma_out);

}  // namespace cavsim::dynamics
