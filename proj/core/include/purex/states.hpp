#pragma once

#include "purex/qcore.hpp"

#include <array>

namespace purex {

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Bell weights in the fixed order (Phi+, Phi-, Psi+, Psi-).
struct BellWeights {
    double phi_plus = 0.0;
    double phi_minus = 0.0;
    double psi_plus = 0.0;
    double psi_minus = 0.0;

    std::array<double, 4> as_array() const { return {phi_plus, phi_minus, psi_plus, psi_minus}; }
};

/// State vector of a Bell state; first nonzero amplitude real positive.
Eigen::Vector4cd bell_vector(BellKind kind);

/// Projector |bell><bell| as a two-qubit density operator.
DensityOp bell_state(BellKind kind);

/// Werner state with Phi+ weight f and the remainder spread equally over
/// the other three Bell states. Requires f in [0, 1].
DensityOp werner(double f);

/// Deterministic projection onto Werner-like Bell-diagonal form: the Psi-
/// (singlet) weight is kept exactly, the other three Bell weights are
/// replaced by their mean, all Bell-basis off-diagonals are dropped.
DensityOp twirl(const DensityOp& rho);

/// Bell-diagonal state with the given weights (must sum to 1).
DensityOp bell_diagonal(const BellWeights& w);

/// pi rotation about the Bloch y axis, exp(-i pi sigma_y / 2) = [[0,-1],[1,0]].
/// On one qubit of a pair it swaps the Psi-/Phi+ and Psi+/Phi- weights of
/// any Bell-diagonal state.
ComplexMatrix rot_y_pi();

/// Which qubit of a pair the preparatory y rotation acts on. The induced
/// Bell-weight permutation is side-independent.
constexpr int kRotYSide = 1;

/// The DEJMPS single-qubit gate (1/sqrt 2)[[1,-i],[-i,1]] (Alice's side);
/// with inverse set, its Hermitian conjugate (Bob's side).
ComplexMatrix dejmps_rotation(bool inverse = false);

/// Diagonal Bell-basis overlaps of a two-qubit state; sums to 1.
BellWeights bell_components(const DensityOp& rho);

/// Overlap with |Phi+>, i.e. <Phi+|rho|Phi+>.
double fidelity(const DensityOp& rho);

}  // namespace purex
