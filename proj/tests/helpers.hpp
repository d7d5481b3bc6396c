#pragma once

#include "purex/qcore.hpp"

#include <numbers>
#include <random>

namespace purex::test {

inline constexpr double kPi = std::numbers::pi;

inline ComplexMatrix random_complex(Eigen::Index dim, std::mt19937& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex(dist(rng), dist(rng));
    return m;
}

inline DensityOp random_density(Eigen::Index dim, std::mt19937& rng) {
    ComplexMatrix g = random_complex(dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Symmetrize away the last rounding noise.
    return DensityOp(0.5 * (rho + rho.adjoint().eval()));
}

inline ComplexMatrix random_unitary(Eigen::Index dim, std::mt19937& rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(dim, rng));
    return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

// Independent propagator oracle: diagonalize the (Hermitian) generator and
// exponentiate its spectrum. u = exp(-i * h * area).
inline ComplexMatrix expm_propagator(const ComplexMatrix& h, double area) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        phases(i) = std::exp(Complex(0.0, -area * es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline ComplexMatrix pauli_x() {
    ComplexMatrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

inline ComplexMatrix pauli_y() {
    ComplexMatrix s(2, 2);
    s << 0, Complex(0, -1), Complex(0, 1), 0;
    return s;
}

inline ComplexMatrix pauli_z() {
    ComplexMatrix s(2, 2);
    s << 1, 0, 0, -1;
    return s;
}

}  // namespace purex::test
