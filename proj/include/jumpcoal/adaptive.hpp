#pragma once

#include "jumpcoal/integrate.hpp"
#include "jumpcoal/rhs.hpp"
#include "jumpcoal/state.hpp"

namespace jumpcoal {

/// Knobs of the automatically adjustable system-size scheme.
struct AdaptiveConfig {
    double epsilon = 1e-12;     ///< relative tolerable level
    long long max_count = 1 << 21;
    bool enabled = false;

    bool operator==(const AdaptiveConfig&) const = default;
};

struct BreachReport {
    bool left = false;
    bool right = false;

    bool any() const { return left || right; }
};

/// Closed form n(t) = n0 / (1 + mu_b n0 t).
double companion_closed_form(double n0, double mu_b, double t);

/// Advances the companion by dt: analytic mode evaluates the closed form,
/// rk_tracked applies the given stepper to dn/dt = -mu_b n^2.
HomogeneousCompanion companion_advance(const HomogeneousCompanion& c,
                                       double dt, StepperKind kind);

/// Boundary-breach monitor, run after every accepted step.
///
/// Dirichlet sides flag when the density at the sentinel knot nearest
/// x_B = edge -/+ max_kernel_radius exceeds epsilon * max n; asymptotic sides
/// flag when the edge value drifts from the homogeneous companion by more
/// than epsilon * max n. Periodic runs never breach.
BreachReport breach_check(const SolverState& state, double max_kernel_radius,
                          const AdaptiveConfig& cfg);

/// Doubles the domain, extending only the breached side by L (both sides by
/// L/2 when both breach at once). h is kept; retained knots keep their
/// physical coordinates bit for bit. New knots are filled with 0 on Dirichlet
/// sides and with the edge value on asymptotic sides. Throws ResourceError
/// when the doubled knot count would exceed cfg.max_count.
SolverState enlarge(const SolverState& state, const BreachReport& report,
                    const AdaptiveConfig& cfg);

} // namespace jumpcoal
