#include "purex/gates.hpp"

#include "purex/states.hpp"

#include <cmath>
#include <numbers>

namespace purex {

namespace {

using std::numbers::pi;

const Complex kI(0.0, 1.0);

ComplexMatrix pauli(PauliAxis axis) {
    ComplexMatrix s(2, 2);
    switch (axis) {
        case PauliAxis::X:
            s << 0, 1, 1, 0;
            break;
        case PauliAxis::Y:
            s << 0, -kI, kI, 0;
            break;
        case PauliAxis::Z:
            s << 1, 0, 0, -1;
            break;
    }
    return s;
}

}  // namespace

ComplexMatrix heisenberg_u(double alpha) {
    Eigen::Vector4cd singlet = bell_vector(BellKind::PsiMinus);
    ComplexMatrix p = singlet * singlet.adjoint();
    ComplexMatrix u = ComplexMatrix::Identity(4, 4) + (std::exp(kI * alpha) - 1.0) * p;
    return std::exp(-kI * alpha / 4.0) * u;
}

ComplexMatrix xy_u(double alpha) {
    const double c = std::cos(alpha / 2.0);
    const Complex s = -kI * std::sin(alpha / 2.0);
    ComplexMatrix u = ComplexMatrix::Identity(4, 4);
    u(1, 1) = c;
    u(1, 2) = s;
    u(2, 1) = s;
    u(2, 2) = c;
    return u;
}

ComplexMatrix exchange_u(ExchangeKind kind, double alpha) {
    return kind == ExchangeKind::Heisenberg ? heisenberg_u(alpha) : xy_u(alpha);
}

ComplexMatrix sqrt_swap() {
    return std::exp(kI * pi / 8.0) * heisenberg_u(pi / 2.0);
}

ComplexMatrix sqrt_swap_inv() {
    return sqrt_swap().adjoint().eval();
}

ComplexMatrix swap_gate() {
    ComplexMatrix s = sqrt_swap();
    return s * s;
}

ComplexMatrix iswap_gate() {
    ComplexMatrix u = ComplexMatrix::Identity(4, 4);
    u(1, 1) = 0;
    u(2, 2) = 0;
    u(1, 2) = kI;
    u(2, 1) = kI;
    return u;
}

ComplexMatrix cnot_direct() {
    ComplexMatrix u = ComplexMatrix::Zero(4, 4);
    u(0, 0) = 1;
    u(1, 1) = 1;
    u(2, 3) = 1;
    u(3, 2) = 1;
    return u;
}

ComplexMatrix cnot_from_sequence() {
    // e^{-i pi/2} e^{-i pi s2y/4} e^{i pi s1z/4} e^{-i pi s2z/4}
    //   sqrtSWAP^dag e^{i pi s1z/2} sqrtSWAP^dag e^{i pi s2y/4}
    // The exchange factors enter with the opposite propagator sign convention,
    // i.e. as the inverse square root of SWAP; with sqrt_swap() itself the
    // product is CNOT only after flipping the outer z-rotation signs.
    ComplexMatrix u = pauli_rotation(PauliAxis::Y, 2, -pi / 4.0) *
                      pauli_rotation(PauliAxis::Z, 1, pi / 4.0) *
                      pauli_rotation(PauliAxis::Z, 2, -pi / 4.0) * sqrt_swap_inv() *
                      pauli_rotation(PauliAxis::Z, 1, pi / 2.0) * sqrt_swap_inv() *
                      pauli_rotation(PauliAxis::Y, 2, pi / 4.0);
    return std::exp(-kI * pi / 2.0) * u;
}

ComplexMatrix pauli_rotation(PauliAxis axis, int qubit, double angle) {
    if (qubit != 1 && qubit != 2) throw std::invalid_argument("pauli_rotation: qubit must be 1 or 2");
    ComplexMatrix r = std::cos(angle) * ComplexMatrix::Identity(2, 2) +
                      kI * std::sin(angle) * pauli(axis);
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    return qubit == 1 ? kron(r, id) : kron(id, r);
}

}  // namespace purex
