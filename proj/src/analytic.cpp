#include "cavsim/analytic.hpp"

#include <cmath>

namespace cavsim::analytic {

namespace {

using qmath::Complex;

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

JCEigensystem jc_eigensystem(const model::MoleculeParams& p) {
    JCEigensystem sys;
    sys.e0 = 0.0;
    sys.e1 = p.omega - p.g_mol;
    sys.e2 = p.omega + p.g_mol;
    sys.e3 = 2.0 * p.omega;
    sys.v0 << 1.0, 0.0, 0.0, 0.0;
    sys.v1 << 0.0, kInvSqrt2, -kInvSqrt2, 0.0;
    sys.v2 << 0.0, kInvSqrt2, kInvSqrt2, 0.0;
    sys.v3 << 0.0, 0.0, 0.0, 1.0;
    return sys;
}

Eigen::Matrix4d atomic_frame(const model::MoleculeParams& p) {
    // |Psi0> = alpha|O> + beta|H>, |Psi1> = -beta|O> + alpha|H>, applied
    // identically in both photon sectors.
    Eigen::Matrix4d frame;
    frame << p.alpha, -p.beta, 0.0, 0.0,     // |0>|O>
        0.0, 0.0, p.alpha, -p.beta,          // |1>|O>
        p.beta, p.alpha, 0.0, 0.0,           // |0>|H>
        0.0, 0.0, p.beta, p.alpha;           // |1>|H>
    return frame;
}

Eigen::Vector4cd evolve_closed_form(const model::MoleculeParams& p, double t) {
    if (t < 0.0 || !std::isfinite(t)) {
        throw ValidationError("evolve_closed_form: t must be nonnegative, got " + std::to_string(t));
    }
    const JCEigensystem sys = jc_eigensystem(p);
    // |psi(0)> = |0>|O> = alpha |0>|Psi0> - beta |0>|Psi1>; overlaps with the
    // dressed states are both -beta/sqrt(2), and the double excitation never
    // participates.
    const Complex phase1 = std::exp(Complex(0.0, -sys.e1 * t));
    const Complex phase2 = std::exp(Complex(0.0, -sys.e2 * t));
    Eigen::Vector4cd energy = p.alpha * sys.v0.cast<Complex>();
    energy += (-p.beta * kInvSqrt2) * phase1 * sys.v1.cast<Complex>();
    energy += (-p.beta * kInvSqrt2) * phase2 * sys.v2.cast<Complex>();
    return atomic_frame(p).cast<Complex>() * energy;
}

double p_oxygen(const model::MoleculeParams& p, double t) {
    if (t < 0.0 || !std::isfinite(t)) {
        throw ValidationError("p_oxygen: t must be nonnegative, got " + std::to_string(t));
    }
    const JCEigensystem sys = jc_eigensystem(p);
    const Complex phase1 = std::exp(Complex(0.0, -sys.e1 * t));
    const Complex phase2 = std::exp(Complex(0.0, -sys.e2 * t));
    const double a2 = p.alpha * p.alpha;
    const double b2 = p.beta * p.beta;
    const double norm2 = a2 + b2;  // 1 after construction; kept for the exact form
    const double term_well = std::norm(2.0 * a2 + b2 * (phase1 + phase2));
    const double term_hop = a2 * b2 * std::norm(phase1 - phase2);
    return (term_well + term_hop) / (4.0 * norm2 * norm2);
}

double asymptotic_p_oxygen(const model::MoleculeParams& p) {
    return p.alpha * p.alpha;
}

}  // namespace cavsim::analytic
