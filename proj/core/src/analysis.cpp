#include "purex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace purex {

namespace {

using std::numbers::pi;

void require_unit_interval(double f, const char* what) {
    if (f < 0.0 || f > 1.0) throw std::invalid_argument(std::string(what) + ": f outside [0, 1]");
}

double checked_ratio(double num, double den) {
    if (std::abs(den) <= 1e-12) throw std::domain_error("fidelity map: undefined (vanishing denominator)");
    return num / den;
}

double map_denominator(double f, double alpha, double beta) {
    const double a = std::cos(alpha) * std::cos(beta);
    const double b = std::sin(alpha) * std::sin(beta);
    const double x = 4.0 * f - 1.0;
    return 6.0 * x * a - 2.0 * x * x * b + 6.0 * (4.0 * f + 5.0);
}

// Coefficients of the cubic N(F) - F D(F) (fixed-point condition with
// denominators cleared), highest degree first.
struct Cubic {
    double c3, c2, c1, c0;

    double eval(double f) const { return ((c3 * f + c2) * f + c1) * f + c0; }
    double scale() const {
        return std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    }
};

Cubic fixed_point_cubic(ExchangeKind kind, double alpha, double beta) {
    const double a = std::cos(alpha) * std::cos(beta);
    const double b = std::sin(alpha) * std::sin(beta);
    if (kind == ExchangeKind::Heisenberg) {
        // (a - 1)(-8F^2 + 22F - 5) + b (32F^3 - 48F^2 + 6F + 1)
        return {32.0 * b, -8.0 * (a - 1.0) - 48.0 * b, 22.0 * (a - 1.0) + 6.0 * b,
                -5.0 * (a - 1.0) + b};
    }
    // a(-24F^2 + 18F - 3) + b(32F^3 - 32F^2 + 10F - 1)
    //   + c(32F^2 + 8F - 4) + (-8F^2 - 26F + 7),  c = cos((alpha + beta)/2)
    const double c = std::cos((alpha + beta) / 2.0);
    return {32.0 * b, -24.0 * a - 32.0 * b + 32.0 * c - 8.0,
            18.0 * a + 10.0 * b + 8.0 * c - 26.0, -3.0 * a - b - 4.0 * c + 7.0};
}

double map_numerator(ExchangeKind kind, double f, double alpha, double beta) {
    const double a = std::cos(alpha) * std::cos(beta);
    const double b = std::sin(alpha) * std::sin(beta);
    const double x = 4.0 * f - 1.0;
    if (kind == ExchangeKind::Heisenberg)
        return x * (4.0 * f + 5.0) * a - x * (8.0 * f + 1.0) * b +
               8.0 * f * (4.0 * f + 1.0) + 5.0;
    const double c = std::cos((alpha + beta) / 2.0);
    return (12.0 * f - 3.0) * a - x * x * b + 4.0 * (8.0 * f * f + 2.0 * f - 1.0) * c +
           4.0 * f * (4.0 * f + 1.0) + 7.0;
}

// The rational map itself, without the [0, 1] domain check: stability
// classification needs finite-difference stencils that may poke just past a
// fixed point sitting on the boundary.
double map_unchecked(ExchangeKind kind, double f, double alpha, double beta) {
    return checked_ratio(map_numerator(kind, f, alpha, beta), map_denominator(f, alpha, beta));
}

Stability classify(ExchangeKind kind, double alpha, double beta, double point) {
    const double h = 1e-6;
    const double d = (map_unchecked(kind, point + h, alpha, beta) -
                      map_unchecked(kind, point - h, alpha, beta)) /
                     (2.0 * h);
    return std::abs(d) < 1.0 ? Stability::Attractive : Stability::Repulsive;
}

}  // namespace

double fidelity_map_heisenberg(double f, double alpha, double beta) {
    require_unit_interval(f, "fidelity_map_heisenberg");
    return map_unchecked(ExchangeKind::Heisenberg, f, alpha, beta);
}

double fidelity_map_inverse_case(double f, double alpha) {
    require_unit_interval(f, "fidelity_map_inverse_case");
    const double den = (f - 1.0) * (4.0 * f - 1.0) * std::cos(2.0 * alpha) -
                       f * (4.0 * f + 7.0) - 7.0;
    return 0.5 + checked_ratio(3.0 - 12.0 * f * f, den);
}

double fidelity_map_optimal(double f) {
    require_unit_interval(f, "fidelity_map_optimal");
    return (16.0 * f * f + f + 1.0) / (8.0 * f * f + 2.0 * f + 8.0);
}

double fidelity_map_xy(double f, double alpha, double beta) {
    require_unit_interval(f, "fidelity_map_xy");
    return map_unchecked(ExchangeKind::XY, f, alpha, beta);
}

double fidelity_map(ExchangeKind kind, double f, double alpha, double beta) {
    return kind == ExchangeKind::Heisenberg ? fidelity_map_heisenberg(f, alpha, beta)
                                            : fidelity_map_xy(f, alpha, beta);
}

double success_prob_closed_form(double f, double alpha, double beta) {
    require_unit_interval(f, "success_prob_closed_form");
    return map_denominator(f, alpha, beta) / 72.0;
}

FixedPointSet fixed_points(ExchangeKind kind, double alpha, double beta) {
    const Cubic cubic = fixed_point_cubic(kind, alpha, beta);
    if (cubic.scale() <= 1e-9)
        throw degenerate_map("fixed_points: identity-family map, F' == F everywhere");
    if (std::abs(cubic.eval(0.25)) > 1e-9 * std::max(cubic.scale(), 1.0))
        throw std::logic_error("fixed_points: F = 1/4 failed the residual check");

    // Synthetic division by (F - 1/4).
    const double q2 = cubic.c3;
    const double q1 = cubic.c2 + q2 / 4.0;
    const double q0 = cubic.c1 + q1 / 4.0;

    std::vector<double> roots;
    const double scale = std::max({std::abs(q2), std::abs(q1), std::abs(q0)});
    if (std::abs(q2) <= 1e-12 * scale) {
        if (std::abs(q1) > 1e-12 * scale) roots.push_back(-q0 / q1);
    } else {
        const double disc = q1 * q1 - 4.0 * q2 * q0;
        if (disc >= 0.0) {
            const double s = std::sqrt(disc);
            const double t = -0.5 * (q1 + std::copysign(s, q1));
            roots.push_back(t / q2);
            if (std::abs(t) > 0.0) roots.push_back(q0 / t);
        }
    }
    std::sort(roots.begin(), roots.end());

    FixedPointSet set{{0.25, classify(kind, alpha, beta, 0.25)}, {}, {}};
    if (roots.size() == 1) {
        set.f_max = FixedPoint{roots[0], classify(kind, alpha, beta, roots[0])};
    } else if (roots.size() == 2) {
        set.f_min = FixedPoint{roots[0], classify(kind, alpha, beta, roots[0])};
        set.f_max = FixedPoint{roots[1], classify(kind, alpha, beta, roots[1])};
    }
    return set;
}

std::vector<SweepRow> fmin_fmax_sweep(const std::vector<double>& betas, int alpha_resolution) {
    if (alpha_resolution < 2) throw std::invalid_argument("fmin_fmax_sweep: resolution must be >= 2");
    std::vector<SweepRow> rows;
    rows.reserve(betas.size() * static_cast<size_t>(alpha_resolution));
    for (double beta : betas) {
        for (int i = 0; i < alpha_resolution; ++i) {
            const double alpha = 2.0 * pi * i / alpha_resolution;
            SweepRow row{alpha, beta, {}, {}, {}};
            try {
                FixedPointSet set = fixed_points(ExchangeKind::Heisenberg, alpha, beta);
                if (set.f_min && set.f_max) {
                    const double lo = set.f_min->value;
                    const double hi = set.f_max->value;
                    // Physically relevant band only: 1/2 <= F_min <= F_max <= 1.
                    if (lo >= 0.5 - 1e-9 && hi <= 1.0 + 1e-9) {
                        row.f_min = std::clamp(lo, 0.5, 1.0);
                        row.f_max = std::clamp(hi, 0.5, 1.0);
                        row.residual = std::max(
                            std::abs(fidelity_map_heisenberg(*row.f_min, alpha, beta) - *row.f_min),
                            std::abs(fidelity_map_heisenberg(*row.f_max, alpha, beta) - *row.f_max));
                    }
                }
            } catch (const degenerate_map&) {
                // gap
            }
            rows.push_back(row);
        }
    }
    return rows;
}

int steps_to_target(double f0, const ProtocolConfig& config, double target) {
    require_unit_interval(f0, "steps_to_target");
    if (f0 > target) return 0;
    IterationTrace trace = iterate(config, f0, target, 1000);
    if (trace.status != IterationStatus::ReachedTarget)
        throw non_purifiable("steps_to_target: fidelity does not reach the target");
    return trace.steps;
}

double pulse_deviation_to_angle(double j_uev, double delta_tau_ns) {
    return j_uev * delta_tau_ns / kHbarUevNs;
}

RobustnessResult robustness(double delta_alpha, double j_uev) {
    RobustnessResult result{delta_alpha, {}, delta_alpha * kHbarUevNs / j_uev};
    try {
        FixedPointSet set = fixed_points(ExchangeKind::Heisenberg, pi / 2.0 + delta_alpha, -pi / 2.0);
        std::optional<double> best;
        for (const auto& p : {set.f_min, set.f_max}) {
            if (p && p->value >= 0.5 - 1e-9 && p->value <= 1.0 + 1e-9)
                best = best ? std::max(*best, p->value) : p->value;
        }
        if (best) result.f_max_achievable = std::min(*best, 1.0);
    } catch (const degenerate_map&) {
        // fully degraded: no attainable fixed point reported
    }
    return result;
}

}  // namespace purex
