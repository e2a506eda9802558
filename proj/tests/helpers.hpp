#pragma once

#include <random>

#include "cavsim/qmath.hpp"

// Shared generators and comparison helpers for the test suites.
namespace cavsim::test {

inline qmath::ComplexMatrix random_complex(std::mt19937& rng, Eigen::Index dim) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    qmath::ComplexMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            m(i, j) = qmath::Complex(dist(rng), dist(rng));
        }
    }
    return m;
}

inline qmath::HermitianOperator random_hermitian(std::mt19937& rng, Eigen::Index dim) {
    const qmath::ComplexMatrix m = random_complex(rng, dim);
    return qmath::HermitianOperator(m + m.adjoint());
}

// Haar-ish random unitary via QR of a random complex matrix.
inline qmath::ComplexMatrix random_unitary(std::mt19937& rng, Eigen::Index dim) {
    const qmath::ComplexMatrix m = random_complex(rng, dim);
    Eigen::HouseholderQR<qmath::ComplexMatrix> qr(m);
    return qr.householderQ() * qmath::ComplexMatrix::Identity(dim, dim);
}

// Random mixed state: normalized A A^dag with A random.
inline qmath::DensityMatrix random_density(std::mt19937& rng, Eigen::Index dim) {
    const qmath::ComplexMatrix a = random_complex(rng, dim);
    qmath::ComplexMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return qmath::DensityMatrix(std::move(rho));
}

inline double max_diff(const qmath::ComplexMatrix& a, const qmath::ComplexMatrix& b) {
    return qmath::max_abs(a - b);
}

}  // namespace cavsim::test
