#include "purex/states.hpp"

#include <cmath>

namespace purex {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

const std::array<BellKind, 4> kBellOrder = {BellKind::PhiPlus, BellKind::PhiMinus,
                                            BellKind::PsiPlus, BellKind::PsiMinus};

}  // namespace

Eigen::Vector4cd bell_vector(BellKind kind) {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    switch (kind) {
        case BellKind::PhiPlus:
            v(0) = kInvSqrt2;
            v(3) = kInvSqrt2;
            break;
        case BellKind::PhiMinus:
            v(0) = kInvSqrt2;
            v(3) = -kInvSqrt2;
            break;
        case BellKind::PsiPlus:
            v(1) = kInvSqrt2;
            v(2) = kInvSqrt2;
            break;
        case BellKind::PsiMinus:
            v(1) = kInvSqrt2;
            v(2) = -kInvSqrt2;
            break;
    }
    return v;
}

DensityOp bell_state(BellKind kind) {
    Eigen::Vector4cd v = bell_vector(kind);
    return DensityOp(v * v.adjoint());
}

DensityOp werner(double f) {
    if (f < 0.0 || f > 1.0) throw std::invalid_argument("werner: fidelity outside [0, 1]");
    const double rest = (1.0 - f) / 3.0;
    return bell_diagonal({f, rest, rest, rest});
}

DensityOp bell_diagonal(const BellWeights& w) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    const auto weights = w.as_array();
    for (int k = 0; k < 4; ++k) {
        Eigen::Vector4cd v = bell_vector(kBellOrder[static_cast<size_t>(k)]);
        m += weights[static_cast<size_t>(k)] * (v * v.adjoint());
    }
    return DensityOp(std::move(m));
}

DensityOp twirl(const DensityOp& rho) {
    BellWeights w = bell_components(rho);
    const double mean = (w.phi_plus + w.phi_minus + w.psi_plus) / 3.0;
    return bell_diagonal({mean, mean, mean, w.psi_minus});
}

ComplexMatrix rot_y_pi() {
    ComplexMatrix r(2, 2);
    r << 0, -1, 1, 0;
    return r;
}

ComplexMatrix dejmps_rotation(bool inverse) {
    const Complex im(0.0, inverse ? 1.0 : -1.0);
    ComplexMatrix r(2, 2);
    r << kInvSqrt2, im * kInvSqrt2, im * kInvSqrt2, kInvSqrt2;
    return r;
}

BellWeights bell_components(const DensityOp& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("bell_components: expected a two-qubit state");
    std::array<double, 4> c{};
    for (int k = 0; k < 4; ++k) {
        Eigen::Vector4cd v = bell_vector(kBellOrder[static_cast<size_t>(k)]);
        c[static_cast<size_t>(k)] = (v.adjoint() * rho.matrix() * v)(0).real();
    }
    return {c[0], c[1], c[2], c[3]};
}

double fidelity(const DensityOp& rho) {
    return bell_components(rho).phi_plus;
}

}  // namespace purex
