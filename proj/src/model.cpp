#include "cavsim/model.hpp"

#include <cmath>

namespace cavsim::model {

namespace {

void require_positive(double value, const char* name, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ValidationError(std::string(what) + ": " + name + " must be positive and finite, got " +
                              std::to_string(value));
    }
}

void require_nonnegative(double value, const char* name, const char* what) {
    if (value < 0.0 || !std::isfinite(value)) {
        throw ValidationError(std::string(what) + ": " + name + " must be nonnegative and finite, got " +
                              std::to_string(value));
    }
}

}  // namespace

BasisLabel::BasisLabel(int n, int el, int nuc) : n(n), el(el), nuc(nuc) {
    auto bit = [](int v) { return v == 0 || v == 1; };
    if (!bit(n) || !bit(el) || !bit(nuc)) {
        throw ValidationError("BasisLabel: components must be 0 or 1");
    }
    if (n == 1 && el == 1) {
        throw ValidationError("BasisLabel: |11x> states are outside the model basis");
    }
}

BasisLabel BasisLabel::from_index(int index) {
    if (index < 0 || index >= kSixLevelDim) {
        throw ValidationError("BasisLabel: index " + std::to_string(index) + " out of range 0..5");
    }
    return BasisLabel((index >> 2) & 1, (index >> 1) & 1, index & 1);
}

BasisLabel BasisLabel::parse(const std::string& text) {
    if (text.size() != 3 || text.find_first_not_of("01") != std::string::npos) {
        throw ValidationError("BasisLabel: expected a three-character 0/1 label, got \"" + text + "\"");
    }
    return BasisLabel(text[0] - '0', text[1] - '0', text[2] - '0');
}

std::string BasisLabel::to_string() const {
    return std::string() + char('0' + n) + char('0' + el) + char('0' + nuc);
}

void CouplingSchedule::validate() const {
    // The ordering below makes g_el_0, g_el_1 strictly positive; the g_c
    // amplitudes may reach zero.
    require_nonnegative(g_el_0, "g_el_0", "CouplingSchedule");
    require_nonnegative(g_el_1, "g_el_1", "CouplingSchedule");
    require_nonnegative(g_c1_amplitude, "g_c1_amplitude", "CouplingSchedule");
    require_nonnegative(g_c0_amplitude, "g_c0_amplitude", "CouplingSchedule");
    require_nonnegative(decay_rate, "decay_rate", "CouplingSchedule");
    require_nonnegative(g0, "g0", "CouplingSchedule");
    require_nonnegative(m_ev, "m_ev", "CouplingSchedule");
    if (!(dominance_ratio >= 1.0) || !std::isfinite(dominance_ratio)) {
        throw ValidationError("CouplingSchedule: dominance_ratio must be >= 1");
    }
    if (g_el_0 < dominance_ratio * g_el_1) {
        throw ValidationError("CouplingSchedule: need g_el_0 >= " + std::to_string(dominance_ratio) +
                              " * g_el_1");
    }
    if (!(g_el_1 > g_c1_amplitude)) {
        throw ValidationError("CouplingSchedule: need g_el_1 > g_c1_amplitude");
    }
    if (g_c1_amplitude < dominance_ratio * g_c0_amplitude) {
        throw ValidationError("CouplingSchedule: need g_c1_amplitude >= " +
                              std::to_string(dominance_ratio) + " * g_c0_amplitude");
    }
}

void ModelParams::validate() const {
    require_positive(omega_el, "omega_el", "ModelParams");
    require_positive(omega_c, "omega_c", "ModelParams");
    if (!(mu >= 0.0 && mu < 1.0)) {
        throw ValidationError("ModelParams: mu must lie in [0, 1), got " + std::to_string(mu));
    }
    schedule.validate();
}

void TunnelingParams::validate() const {
    require_positive(a, "a", "TunnelingParams");
    require_positive(g, "g", "TunnelingParams");
}

MoleculeParams::MoleculeParams(double omega, double g_mol, double alpha, double beta)
    : omega(omega), g_mol(g_mol), alpha(alpha), beta(beta) {
    require_positive(omega, "omega", "MoleculeParams");
    require_positive(g_mol, "g_mol", "MoleculeParams");
    if (!(alpha > beta && beta > 0.0)) {
        throw ValidationError("MoleculeParams: need alpha > beta > 0");
    }
    const double norm = std::sqrt(alpha * alpha + beta * beta);
    if (!std::isfinite(norm) || norm == 0.0) {
        throw ValidationError("MoleculeParams: amplitudes not normalizable");
    }
    this->alpha /= norm;
    this->beta /= norm;
}

qmath::HermitianOperator tunneling_hamiltonian(const TunnelingParams& p) {
    p.validate();
    qmath::ComplexMatrix h(2, 2);
    h << 0.0, -p.g,
        -p.g, p.a;
    return qmath::HermitianOperator(std::move(h));
}

double orbital_gap(const TunnelingParams& p) {
    p.validate();
    return std::sqrt(p.a * p.a + 4.0 * p.g * p.g);
}

MolecularOrbitals molecular_orbitals(const TunnelingParams& p) {
    const auto eig = qmath::hermitian_eigendecompose(tunneling_hamiltonian(p));
    if (eig.eigenvalues[1] - eig.eigenvalues[0] <= 0.0) {
        throw Error("molecular_orbitals: degenerate spectrum");
    }
    // a, g > 0 make both eigenvectors real up to phase.
    Eigen::Vector2d ground = eig.eigenvectors.col(0).real();
    Eigen::Vector2d excited = eig.eigenvectors.col(1).real();
    if (ground[0] < 0.0) ground = -ground;
    if (excited[1] < 0.0) excited = -excited;
    if (!(std::abs(ground[0]) > std::abs(ground[1])) ||
        !(std::abs(excited[0]) < std::abs(excited[1]))) {
        throw Error("molecular_orbitals: amplitude ordering violated");
    }
    return MolecularOrbitals{ground, excited};
}

double cavity_coupling(double omega, double volume, double field_envelope, double dipole) {
    require_positive(omega, "omega", "cavity_coupling");
    require_positive(volume, "volume", "cavity_coupling");
    require_positive(field_envelope, "field_envelope", "cavity_coupling");
    require_positive(dipole, "dipole", "cavity_coupling");
    return std::sqrt(omega / volume) * field_envelope * dipole;
}

double effective_phonon_coupling(double g0, double m_ev) {
    require_nonnegative(g0, "g0", "effective_phonon_coupling");
    require_nonnegative(m_ev, "m_ev", "effective_phonon_coupling");
    return g0 * std::sqrt(m_ev);
}

CouplingValues coupling_schedule_eval(const CouplingSchedule& s, double t) {
    if (t < 0.0 || !std::isfinite(t)) {
        throw ValidationError("coupling_schedule_eval: t must be nonnegative, got " + std::to_string(t));
    }
    const double decay = std::exp(-s.decay_rate * t);
    return CouplingValues{s.g_c0_amplitude * decay, s.g_c1_amplitude * decay, s.g_el_0, s.g_el_1};
}

qmath::HermitianOperator build_jc_hamiltonian(double omega, double g, bool include_strong) {
    require_positive(omega, "omega", "build_jc_hamiltonian");
    require_nonnegative(g, "g", "build_jc_hamiltonian");
    // Basis |n, s>, photon-major: |00>, |01>, |10>, |11>.
    qmath::ComplexMatrix h = qmath::ComplexMatrix::Zero(4, 4);
    h(1, 1) = omega;
    h(2, 2) = omega;
    h(3, 3) = 2.0 * omega;
    h(1, 2) = g;  // sigma^+ a : |10> -> |01>
    h(2, 1) = g;
    if (include_strong) {
        h(0, 3) = g;  // sigma a : |11> -> |00>
        h(3, 0) = g;
    }
    return qmath::HermitianOperator(std::move(h));
}

qmath::ComplexMatrix jc_photon_lowering() {
    qmath::ComplexMatrix a = qmath::ComplexMatrix::Zero(4, 4);
    a(0, 2) = 1.0;
    a(1, 3) = 1.0;
    return a;
}

qmath::HermitianOperator build_six_level_hamiltonian(const ModelParams& p, double t) {
    p.validate();
    const CouplingValues c = coupling_schedule_eval(p.schedule, t);
    qmath::ComplexMatrix h = qmath::ComplexMatrix::Zero(kSixLevelDim, kSixLevelDim);
    // Diagonal: omega_el * (n + el) + omega_c * nuc.
    for (int idx = 0; idx < kSixLevelDim; ++idx) {
        const BasisLabel label = BasisLabel::from_index(idx);
        h(idx, idx) = p.omega_el * (label.n + label.el) + p.omega_c * label.nuc;
    }
    auto couple = [&h](int i, int j, double g) {
        h(i, j) = g;
        h(j, i) = g;
    };
    couple(0, 1, c.g_c0);   // |000> <-> |001>
    couple(2, 3, c.g_c1);   // |010> <-> |011>
    couple(2, 4, c.g_el0);  // |010> <-> |100>
    couple(3, 5, c.g_el1);  // |011> <-> |101>
    couple(4, 5, c.g_c0);   // |100> <-> |101>
    return qmath::HermitianOperator(std::move(h));
}

double temperature_from_ratio(double mu, double omega_c) {
    require_positive(omega_c, "omega_c", "temperature_from_ratio");
    if (mu >= 1.0 || !std::isfinite(mu)) {
        throw ValidationError("temperature_from_ratio: mu must be < 1, got " + std::to_string(mu));
    }
    if (mu <= 0.0) return 0.0;
    return omega_c / std::log(1.0 / mu);
}

qmath::DensityMatrix gibbs_state(double mu, int levels) {
    if (!(mu >= 0.0 && mu < 1.0)) {
        throw ValidationError("gibbs_state: mu must lie in [0, 1), got " + std::to_string(mu));
    }
    if (levels < 1) {
        throw ValidationError("gibbs_state: need at least one level");
    }
    Eigen::VectorXd weights(levels);
    double w = 1.0;
    for (int n = 0; n < levels; ++n, w *= mu) weights[n] = w;
    weights /= weights.sum();
    qmath::ComplexMatrix m = qmath::ComplexMatrix::Zero(levels, levels);
    for (int n = 0; n < levels; ++n) m(n, n) = weights[n];
    return qmath::DensityMatrix(std::move(m));
}

}  // namespace cavsim::model
