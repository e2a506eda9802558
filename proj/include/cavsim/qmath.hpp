#pragma once

#include <Eigen/Dense>
#include <complex>

#include "cavsim/errors.hpp"

// Dense complex matrix kernel: Hermitian eigendecomposition, exact unitary
// propagators, and density-matrix diagnostics. Dimensions stay tiny (<= 8),
// so everything is done densely through Eigen.
namespace cavsim::qmath {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numeric tolerances used by the validation layer. These are artifact-wide
// conventions, referenced by tests as well.
inline constexpr double kHermitianRelTol = 1e-12;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPositivityTol = 1e-8;
inline constexpr double kUnitaryTol = 1e-10;

// Largest entry magnitude; 0 for an empty matrix.
double max_abs(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

// ||M - M^dag||_max
double hermiticity_defect(const ComplexMatrix& m);

// ||U^dag U - I||_max
double unitarity_defect(const ComplexMatrix& u);

// A square complex matrix equal to its conjugate transpose within
// kHermitianRelTol relative to its largest entry. Immutable after
// construction.
class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    ComplexMatrix m_;
};

// Hermitian, unit-trace, positive-semidefinite (within tolerance) state.
// `positivity_tol` loosens the smallest-eigenvalue check for states coming
// out of the Euler dissipator, which may dip slightly negative.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m, double positivity_tol = kPositivityTol);

    // Bypasses the eigenvalue check; for integrator internals that produce
    // states already known to be admissible. Finiteness is still enforced.
    static DensityMatrix trusted(ComplexMatrix m);

    static DensityMatrix pure_basis_state(Eigen::Index dim, Eigen::Index k);

    const ComplexMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    struct TrustedTag {};
    DensityMatrix(ComplexMatrix m, TrustedTag);

    ComplexMatrix m_;
};

// Eigenvalues ascending; eigenvector columns orthonormal with the first
// nonzero component of each column made real positive.
struct EigenDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

struct DensityDiagnostics {
    double trace;
    double purity;
    double min_eig;
};

EigenDecomposition hermitian_eigendecompose(const HermitianOperator& h);

// U = exp(-i H dt) through the eigendecomposition of H.
ComplexMatrix unitary_propagator(const HermitianOperator& h, double dt);

// U rho U^dag. U must be unitary within kUnitaryTol.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u);

DensityDiagnostics density_diagnostics(const DensityMatrix& rho);

}  // namespace cavsim::qmath
