#pragma once

#include "purex/qcore.hpp"

namespace purex {

enum class ExchangeKind { Heisenberg, XY };

/// Propagator of the pulsed Heisenberg exchange for pulse area alpha:
/// exp(-i alpha/4) (1 + (exp(i alpha) - 1) |Psi-><Psi-|).
ComplexMatrix heisenberg_u(double alpha);

/// Propagator of the pulsed XY interaction: identity on |00>, |11>;
/// [[cos(a/2), -i sin(a/2)], [-i sin(a/2), cos(a/2)]] on the {|01>, |10>}
/// block. xy_u(-pi) is the iSWAP gate.
ComplexMatrix xy_u(double alpha);

/// Propagator for either kind.
ComplexMatrix exchange_u(ExchangeKind kind, double alpha);

/// exp(i pi/8) * heisenberg_u(pi/2); squares to SWAP.
ComplexMatrix sqrt_swap();
ComplexMatrix sqrt_swap_inv();
ComplexMatrix swap_gate();
ComplexMatrix iswap_gate();

/// CNOT with the more significant qubit as control.
ComplexMatrix cnot_direct();

/// CNOT composed from two sqrt(SWAP) pulses and single-qubit z/y rotations.
ComplexMatrix cnot_from_sequence();

enum class PauliAxis { X, Y, Z };

/// exp(i angle * sigma^axis) on the given qubit (1 or 2) of a pair,
/// identity on the other.
ComplexMatrix pauli_rotation(PauliAxis axis, int qubit, double angle);

}  // namespace purex
