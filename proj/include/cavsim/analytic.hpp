#pragma once

#include <Eigen/Dense>

#include "cavsim/model.hpp"

// Closed-form solution of the four-level molecule model, used as an
// independent oracle for the numerical integrator: exact eigensystem,
// exact state evolution from |0>|O>, the electron-on-oxygen probability,
// and its relaxation asymptote under photon leakage.
//
// Energy basis order: |0>|Psi0>, |0>|Psi1>, |1>|Psi0>, |1>|Psi1>.
// Atomic basis order: |0>|O>, |1>|O>, |0>|H>, |1>|H>.
namespace cavsim::analytic {

// The four eigenpairs: the trivial zero-energy ground entry plus the two
// dressed single-excitation states and the double excitation.
struct JCEigensystem {
    double e0 = 0.0;  // |0>|Psi0>
    double e1 = 0.0;  // omega - g_mol, (|0>|Psi1> - |1>|Psi0>) / sqrt(2)
    double e2 = 0.0;  // omega + g_mol, (|0>|Psi1> + |1>|Psi0>) / sqrt(2)
    double e3 = 0.0;  // 2 omega, |1>|Psi1>
    Eigen::Vector4cd v0, v1, v2, v3;
};

JCEigensystem jc_eigensystem(const model::MoleculeParams& p);

// Unitary change of coordinates from the energy basis to the atomic basis.
Eigen::Matrix4d atomic_frame(const model::MoleculeParams& p);

// Amplitudes of the state at time t in the atomic basis, starting from
// |0>|O>. Unit norm for all t.
Eigen::Vector4cd evolve_closed_form(const model::MoleculeParams& p, double t);

// P(|O>) = |<0,O|psi(t)>|^2 + |<1,O|psi(t)>|^2, evaluated from the exact
// modulus-squared expression.
double p_oxygen(const model::MoleculeParams& p, double t);

// Long-time limit of P(|O>) under photon leakage: alpha^2.
double asymptotic_p_oxygen(const model::MoleculeParams& p);

}  // namespace cavsim::analytic
