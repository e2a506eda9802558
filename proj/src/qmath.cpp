#include "cavsim/qmath.hpp"

#include <cmath>
#include <string>

namespace cavsim::qmath {

namespace {

// Components below this magnitude are treated as zero when picking the
// phase-fixing pivot of an eigenvector.
constexpr double kPhasePivotTol = 1e-12;

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError(std::string(what) + ": matrix must be square and nonempty, got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_finite(const ComplexMatrix& m, const char* what) {
    if (!all_finite(m)) {
        throw ValidationError(std::string(what) + ": matrix has non-finite entries");
    }
}

void require_hermitian(const ComplexMatrix& m, const char* what) {
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianRelTol * max_abs(m)) {
        throw ValidationError(std::string(what) + ": matrix is not Hermitian (defect " +
                              std::to_string(defect) + ")");
    }
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex& z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    }
    return true;
}

double hermiticity_defect(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

double unitarity_defect(const ComplexMatrix& u) {
    return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
    require_square(m_, "HermitianOperator");
    require_finite(m_, "HermitianOperator");
    require_hermitian(m_, "HermitianOperator");
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double positivity_tol) : m_(std::move(m)) {
    require_square(m_, "DensityMatrix");
    require_finite(m_, "DensityMatrix");
    require_hermitian(m_, "DensityMatrix");
    const double trace = m_.trace().real();
    if (std::abs(trace - 1.0) > kTraceTol) {
        throw ValidationError("DensityMatrix: trace " + std::to_string(trace) + " is not 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m_, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -positivity_tol) {
        throw ValidationError("DensityMatrix: smallest eigenvalue " + std::to_string(min_eig) +
                              " below -" + std::to_string(positivity_tol));
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, TrustedTag) : m_(std::move(m)) {
    require_square(m_, "DensityMatrix");
    require_finite(m_, "DensityMatrix");
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
    return DensityMatrix(std::move(m), TrustedTag{});
}

DensityMatrix DensityMatrix::pure_basis_state(Eigen::Index dim, Eigen::Index k) {
    if (dim < 1 || k < 0 || k >= dim) {
        throw ValidationError("pure_basis_state: index " + std::to_string(k) +
                              " out of range for dim " + std::to_string(dim));
    }
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(k, k) = 1.0;
    return DensityMatrix(std::move(m), TrustedTag{});
}

EigenDecomposition hermitian_eigendecompose(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw ValidationError("hermitian_eigendecompose: solver failed to converge");
    }
    EigenDecomposition result{solver.eigenvalues(), solver.eigenvectors()};
    // Fix each column's global phase: first nonzero component real positive.
    for (Eigen::Index j = 0; j < result.eigenvectors.cols(); ++j) {
        for (Eigen::Index i = 0; i < result.eigenvectors.rows(); ++i) {
            const Complex pivot = result.eigenvectors(i, j);
            if (std::abs(pivot) > kPhasePivotTol) {
                result.eigenvectors.col(j) *= std::conj(pivot) / std::abs(pivot);
                break;
            }
        }
    }
    return result;
}

ComplexMatrix unitary_propagator(const HermitianOperator& h, double dt) {
    if (!std::isfinite(dt)) {
        throw ValidationError("unitary_propagator: dt must be finite");
    }
    const EigenDecomposition eig = hermitian_eigendecompose(h);
    ComplexVector phases(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases[i] = std::exp(Complex(0.0, -eig.eigenvalues[i] * dt));
    }
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
    require_square(u, "conjugate");
    if (u.rows() != rho.dim()) {
        throw ValidationError("conjugate: dimension mismatch, state " + std::to_string(rho.dim()) +
                              " vs operator " + std::to_string(u.rows()));
    }
    require_finite(u, "conjugate");
    if (unitarity_defect(u) > kUnitaryTol) {
        throw ValidationError("conjugate: operator is not unitary");
    }
    // Spectrum is preserved, so the result stays admissible.
    return DensityMatrix::trusted(u * rho.matrix() * u.adjoint());
}

DensityDiagnostics density_diagnostics(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    return DensityDiagnostics{
        m.trace().real(),
        (m * m).trace().real(),
        solver.eigenvalues().minCoeff(),
    };
}

}  // namespace cavsim::qmath
