#pragma once

#include <Eigen/Dense>
#include <string>

#include "cavsim/qmath.hpp"

// Hamiltonian constructors and physical parameter records for the
// electron-field-nucleus model: the two-site tunneling operator, the
// photon-truncated field-coupling Hamiltonian, the six-level
// association/dissociation model, coupling schedules, and thermal-bath
// quantities. Units: hbar = K = 1 throughout.
namespace cavsim::model {

inline constexpr int kSixLevelDim = 6;

// Occupation label (n, el, nuc): photon count, electron level, nuclear
// separation. Canonical index 4n + 2el + nuc enumerates the six admissible
// states 000,001,010,011,100,101; the doubly-excited labels 110 and 111 are
// outside the model space and rejected.
struct BasisLabel {
    int n = 0;
    int el = 0;
    int nuc = 0;

    BasisLabel() = default;
    BasisLabel(int n, int el, int nuc);

    static BasisLabel from_index(int index);
    static BasisLabel parse(const std::string& text);  // e.g. "010"

    int index() const { return 4 * n + 2 * el + nuc; }
    std::string to_string() const;
};

// Time-dependent coupling strengths. The nucleus-phonon couplings
// g_c(el, t) = amplitude * exp(-decay_rate * t) model the cooling bath;
// the electron-field couplings g_el(nuc) are constant. The strength
// hierarchy g_el(0) >> g_el(1) > g_c(1) >> g_c(0) is enforced with a
// configurable minimum ratio standing in for ">>".
struct CouplingSchedule {
    double g_el_0 = 0.0;
    double g_el_1 = 0.0;
    double g_c1_amplitude = 0.0;
    double g_c0_amplitude = 0.0;
    double decay_rate = 0.0;
    double g0 = 0.0;    // bare nucleus-phonon coupling
    double m_ev = 0.0;  // mean phonon number of the bath mode
    double dominance_ratio = 100.0;

    void validate() const;
};

// Coupling strengths evaluated at one instant.
struct CouplingValues {
    double g_c0 = 0.0;
    double g_c1 = 0.0;
    double g_el0 = 0.0;
    double g_el1 = 0.0;
};

// Parameters of the six-level model. mu = gamma_in / gamma_out is the
// boson inflow/outflow ratio of the bath.
struct ModelParams {
    double omega_el = 0.0;
    double omega_c = 0.0;
    double mu = 0.0;
    CouplingSchedule schedule;

    void validate() const;
};

// Two-site tunneling operator parameters: a is the on-site potential
// difference, g the tunneling strength (inversely proportional to the
// barrier height).
struct TunnelingParams {
    double a = 0.0;
    double g = 0.0;

    void validate() const;
};

// Four-level molecule model: photon mode at the transition frequency omega,
// field coupling g_mol = 1/L, and well-depth amplitudes alpha > beta > 0,
// normalized to alpha^2 + beta^2 = 1 at construction.
struct MoleculeParams {
    double omega = 0.0;
    double g_mol = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    MoleculeParams(double omega, double g_mol, double alpha, double beta);
};

struct MolecularOrbitals {
    Eigen::Vector2d ground;   // |lambda_O| > |lambda_H|, lambda_O > 0
    Eigen::Vector2d excited;  // |lambda_O| < |lambda_H|, lambda_H > 0
};

// [[0, -g], [-g, a]] in the (|O>, |H>) site basis.
qmath::HermitianOperator tunneling_hamiltonian(const TunnelingParams& p);

// Energy gap sqrt(a^2 + 4 g^2) between the two orbital eigenstates.
double orbital_gap(const TunnelingParams& p);

// Unit-norm eigenvectors of the tunneling operator, ground = lower energy.
MolecularOrbitals molecular_orbitals(const TunnelingParams& p);

// g = sqrt(omega / volume) * field_envelope * dipole.
double cavity_coupling(double omega, double volume, double field_envelope, double dipole);

// g_c = g0 * sqrt(m_ev).
double effective_phonon_coupling(double g0, double m_ev);

CouplingValues coupling_schedule_eval(const CouplingSchedule& s, double t);

// Photon-truncated (n in {0,1}) field-coupling Hamiltonian on the 4-dim
// basis |n, s>, photon-major. Without the strong (counter-rotating) term it
// is block diagonal in the total excitation number; with it, |00> couples
// to |11>.
qmath::HermitianOperator build_jc_hamiltonian(double omega, double g, bool include_strong);

// Photon lowering operator on the same 4-dim basis: sum_s |0,s><1,s|.
qmath::ComplexMatrix jc_photon_lowering();

// The 6x6 model Hamiltonian at time t, in the canonical basis order.
qmath::HermitianOperator build_six_level_hamiltonian(const ModelParams& p, double t);

// Inverts mu = exp(-omega_c / T); returns 0 for mu <= 0 (zero-temperature
// limit). mu >= 1 is rejected.
double temperature_from_ratio(double mu, double omega_c);

// Diagonal thermal state with level ratio mu, normalized over the
// truncation: p_n proportional to mu^n for n = 0..levels-1.
qmath::DensityMatrix gibbs_state(double mu, int levels);

}  // namespace cavsim::model
