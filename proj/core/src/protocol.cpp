#include "purex/protocol.hpp"

namespace purex {

namespace {

// Projector onto equal z outcomes of qubits 3 and 4 (both up or both down),
// identity on the source pair.
ComplexMatrix equal_outcome_projector() {
    ComplexMatrix p34 = ComplexMatrix::Zero(4, 4);
    p34(0, 0) = 1;  // |00><00|
    p34(3, 3) = 1;  // |11><11|
    return kron(ComplexMatrix::Identity(4, 4), p34);
}

RoundOutcome measure_and_reduce(const DensityOp& full) {
    auto [kept, prob] = postselect(full, equal_outcome_projector());
    DensityOp source = partial_trace(kept, {1, 2});
    const double f = fidelity(source);
    return {std::move(source), prob, f};
}

void require_pair(const DensityOp& rho, const char* what) {
    if (rho.dim() != 4) throw std::invalid_argument(std::string(what) + ": expected two-qubit inputs");
}

}  // namespace

RoundOutcome round_exchange(const DensityOp& pair1, const DensityOp& pair2, double alpha,
                            double beta, ExchangeKind kind) {
    require_pair(pair1, "round_exchange");
    require_pair(pair2, "round_exchange");
    DensityOp rho(kron(pair1.matrix(), pair2.matrix()));
    ComplexMatrix u = embed(exchange_u(kind, alpha), {1, 3}, 4) *
                      embed(exchange_u(kind, beta), {2, 4}, 4);
    return measure_and_reduce(evolve(rho, u));
}

RoundOutcome round_bbpssw(const DensityOp& pair1, const DensityOp& pair2) {
    require_pair(pair1, "round_bbpssw");
    require_pair(pair2, "round_bbpssw");
    DensityOp rho(kron(pair1.matrix(), pair2.matrix()));
    ComplexMatrix u = embed(cnot_direct(), {1, 3}, 4) * embed(cnot_direct(), {2, 4}, 4);
    return measure_and_reduce(evolve(rho, u));
}

RoundOutcome round_dejmps_exchange(const DensityOp& pair1, const DensityOp& pair2,
                                   double alpha, double beta) {
    require_pair(pair1, "round_dejmps_exchange");
    require_pair(pair2, "round_dejmps_exchange");
    ComplexMatrix ra = dejmps_rotation(false);
    ComplexMatrix rb = dejmps_rotation(true);
    // Alice rotates qubits 1 and 3, Bob inversely rotates 2 and 4.
    ComplexMatrix local = kron(kron(ra, rb), kron(ra, rb));
    DensityOp rho = evolve(DensityOp(kron(pair1.matrix(), pair2.matrix())), local);
    ComplexMatrix u = embed(heisenberg_u(alpha), {1, 3}, 4) *
                      embed(heisenberg_u(beta), {2, 4}, 4);
    return measure_and_reduce(evolve(rho, u));
}

RoundOutcome run_round(const ProtocolConfig& config, const DensityOp& pair1,
                       const DensityOp& pair2) {
    switch (config.kind) {
        case ProtocolKind::Exchange:
            return round_exchange(pair1, pair2, config.alpha, config.beta, ExchangeKind::Heisenberg);
        case ProtocolKind::XY:
            return round_exchange(pair1, pair2, config.alpha, config.beta, ExchangeKind::XY);
        case ProtocolKind::BBPSSW:
            return round_bbpssw(pair1, pair2);
        case ProtocolKind::DejmpsExchange:
            return round_dejmps_exchange(pair1, pair2, config.alpha, config.beta);
    }
    throw std::logic_error("run_round: unknown protocol kind");
}

IterationTrace iterate(const ProtocolConfig& config, double f0, double target, int max_steps) {
    if (f0 <= 0.0 || f0 > 1.0) throw std::invalid_argument("iterate: f0 outside (0, 1]");
    if (target <= f0 || target >= 1.0) throw std::invalid_argument("iterate: target outside (f0, 1)");
    if (max_steps < 1) throw std::invalid_argument("iterate: max_steps must be >= 1");

    IterationTrace trace;
    DensityOp input = werner(f0);
    for (int step = 0; step < max_steps; ++step) {
        RoundOutcome outcome = run_round(config, input, input);
        trace.fidelities.push_back(outcome.out_fidelity);
        trace.success_probs.push_back(outcome.success_prob);
        ++trace.steps;
        if (outcome.out_fidelity > target) {
            trace.status = IterationStatus::ReachedTarget;
            return trace;
        }
        input = config.mode == RetwirlMode::WernerEachRound
                    ? werner(std::clamp(outcome.out_fidelity, 0.0, 1.0))
                    : outcome.out_state;
    }
    // A fidelity at or below where it started will never cross the target.
    trace.status = trace.fidelities.back() <= f0 + 1e-12 ? IterationStatus::NonPurifiable
                                                         : IterationStatus::MaxStepsExceeded;
    return trace;
}

}  // namespace purex
