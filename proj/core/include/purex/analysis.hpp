#pragma once

#include "purex/protocol.hpp"

#include <optional>
#include <vector>

namespace purex {

/// Thrown when a requested map belongs to the identity family
/// (alpha = n pi, beta = m pi, alpha - beta = 2 pi k), where F' == F and
/// the fixed-point cubic degenerates.
struct degenerate_map : std::domain_error {
    using std::domain_error::domain_error;
};

/// Closed-form single-round fidelity map of the Heisenberg protocol.
double fidelity_map_heisenberg(double f, double alpha, double beta);

/// The beta = -alpha restriction of the Heisenberg map.
double fidelity_map_inverse_case(double f, double alpha);

/// The optimal case alpha = pi/2, beta = -pi/2:
/// (16 F^2 + F + 1) / (8 F^2 + 2 F + 8).
double fidelity_map_optimal(double f);

/// Closed-form single-round fidelity map of the XY protocol.
double fidelity_map_xy(double f, double alpha, double beta);

double fidelity_map(ExchangeKind kind, double f, double alpha, double beta);

/// Closed-form round success probability (shared denominator of both maps,
/// divided by 72).
double success_prob_closed_form(double f, double alpha, double beta);

enum class Stability { Attractive, Repulsive };

struct FixedPoint {
    double value;
    Stability stability;
};

struct FixedPointSet {
    FixedPoint f_c;                      // always 1/4 when defined
    std::optional<FixedPoint> f_min;     // smaller real root of the quadratic factor
    std::optional<FixedPoint> f_max;     // larger real root
};

/// Fixed points of the single-round fidelity map: clears denominators to a
/// cubic, deflates the constant root F = 1/4 and solves the remaining
/// quadratic in closed form. Stability is classified by the magnitude of
/// the numerical derivative of the map at each point (central differences,
/// step 1e-6). Throws degenerate_map for the identity family.
FixedPointSet fixed_points(ExchangeKind kind, double alpha, double beta);

struct SweepRow {
    double alpha;
    double beta;
    std::optional<double> f_min;  // only when 1/2 <= f_min <= f_max <= 1
    std::optional<double> f_max;
    std::optional<double> residual;  // max |map(p) - p| over emitted points
};

/// Fixed-point sweep over an alpha grid of the given resolution on
/// [0, 2 pi), one row per (alpha, beta); degenerate or out-of-range points
/// are recorded as gaps.
std::vector<SweepRow> fmin_fmax_sweep(const std::vector<double>& betas, int alpha_resolution);

/// Thrown by steps_to_target when the configured protocol cannot lift f0
/// above the target.
struct non_purifiable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Smallest number of rounds after which the fidelity exceeds target,
/// starting from werner(f0); 0 when f0 already exceeds it.
int steps_to_target(double f0, const ProtocolConfig& config, double target);

/// hbar in ueV * ns.
inline constexpr double kHbarUevNs = 0.6582119569;

struct RobustnessResult {
    double delta_alpha;                          // radians
    std::optional<double> f_max_achievable;      // absent when fully degraded
    double delta_tau;                            // ns, for the given J
};

/// Pulse-timing error to pulse-area error: delta_alpha = J * delta_tau / hbar.
double pulse_deviation_to_angle(double j_uev, double delta_tau_ns);

/// Largest fixed point in [1/2, 1] of the Heisenberg map at
/// (pi/2 + delta_alpha, -pi/2), i.e. Bob perfect, Alice's pulse off by
/// delta_alpha. delta_tau is reported for the given exchange energy.
RobustnessResult robustness(double delta_alpha, double j_uev = 1.0);

}  // namespace purex
