#pragma once

#include "purex/gates.hpp"
#include "purex/qcore.hpp"
#include "purex/states.hpp"

#include <vector>

namespace purex {

enum class ProtocolKind { Exchange, XY, BBPSSW, DejmpsExchange };
enum class RetwirlMode { WernerEachRound, BellDiagonalTracking };

struct ProtocolConfig {
    ProtocolKind kind = ProtocolKind::Exchange;
    double alpha = 0.0;  // Alice's pulse area (ignored by BBPSSW)
    double beta = 0.0;   // Bob's pulse area (ignored by BBPSSW)
    RetwirlMode mode = RetwirlMode::WernerEachRound;
};

struct RoundOutcome {
    DensityOp out_state;  // post-selected source pair (qubits 1, 2)
    double success_prob;
    double out_fidelity;
};

/// One purification round: rho = pair1 (qubits 1,2) (x) pair2 (qubits 3,4);
/// Alice drives (1,3) with pulse area alpha, Bob (2,4) with beta; qubits 3
/// and 4 are post-selected onto the equal-outcome subspace and traced out.
/// Throws impossible_outcome when the kept branch has zero weight.
RoundOutcome round_exchange(const DensityOp& pair1, const DensityOp& pair2, double alpha,
                            double beta, ExchangeKind kind = ExchangeKind::Heisenberg);

/// BBPSSW round: bilateral CNOT with sources (1,2) and targets (3,4),
/// then the same keep rule and reduction as round_exchange.
RoundOutcome round_bbpssw(const DensityOp& pair1, const DensityOp& pair2);

/// DEJMPS-style variant: the DEJMPS rotation on Alice's qubits (1,3) and
/// its inverse on Bob's (2,4), then exactly round_exchange(alpha, beta).
RoundOutcome round_dejmps_exchange(const DensityOp& pair1, const DensityOp& pair2,
                                   double alpha, double beta);

RoundOutcome run_round(const ProtocolConfig& config, const DensityOp& pair1,
                       const DensityOp& pair2);

enum class IterationStatus { ReachedTarget, MaxStepsExceeded, NonPurifiable };

struct IterationTrace {
    std::vector<double> fidelities;     // fidelity after each round
    std::vector<double> success_probs;  // matching per-round success probabilities
    int steps = 0;
    IterationStatus status = IterationStatus::MaxStepsExceeded;
};

/// Iterate the configured round starting from werner(f0) until the fidelity
/// exceeds target or max_steps rounds have run. WernerEachRound replaces
/// each output by werner(out_fidelity); BellDiagonalTracking feeds the full
/// output state into both input slots of the next round.
IterationTrace iterate(const ProtocolConfig& config, double f0, double target, int max_steps);

}  // namespace purex
