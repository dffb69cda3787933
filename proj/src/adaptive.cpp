#include "jumpcoal/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "jumpcoal/errors.hpp"

namespace jumpcoal {

double companion_closed_form(double n0, double mu_b, double t) {
    return n0 / (1.0 + mu_b * n0 * t);
}

HomogeneousCompanion companion_advance(const HomogeneousCompanion& c,
                                       double dt, StepperKind kind) {
    HomogeneousCompanion next = c;
    next.time = c.time + dt;

    if (c.mode == CompanionMode::analytic) {
        next.density = companion_closed_form(c.initial, c.coalescence_mu,
                                             next.time);
        return next;
    }

    const double mu = c.coalescence_mu;
    auto f = [mu](double y) { return -mu * y * y; };
    const double y = c.density;
    switch (kind) {
        case StepperKind::rk4: {
            const double k1 = f(y);
            const double k2 = f(y + 0.5 * dt * k1);
            const double k3 = f(y + 0.5 * dt * k2);
            const double k4 = f(y + dt * k3);
            next.density = y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            break;
        }
        case StepperKind::rk2_heun: {
            const double k1 = f(y);
            const double k2 = f(y + dt * k1);
            next.density = y + 0.5 * dt * (k1 + k2);
            break;
        }
        case StepperKind::rk2_midpoint: {
            const double k1 = f(y);
            next.density = y + dt * f(y + 0.5 * dt * k1);
            break;
        }
    }
    return next;
}

namespace {

enum class SideRule { wall, flat };  // Dirichlet zero-fill vs asymptotic

struct SideRules {
    SideRule left, right;
};

SideRules side_rules(BoundaryMode mode) {
    switch (mode) {
        case BoundaryMode::dirichlet:
            return {SideRule::wall, SideRule::wall};
        case BoundaryMode::asymptotic:
            return {SideRule::flat, SideRule::flat};
        case BoundaryMode::left_asymptotic_right_dirichlet:
            return {SideRule::flat, SideRule::wall};
        case BoundaryMode::left_dirichlet_right_asymptotic:
            return {SideRule::wall, SideRule::flat};
        case BoundaryMode::periodic:
            break;
    }
    throw std::invalid_argument(
        "size adjustment is undefined for periodic boundaries");
}

} // namespace

BreachReport breach_check(const SolverState& state, double max_kernel_radius,
                          const AdaptiveConfig& cfg) {
    BreachReport report;
    if (state.mode == BoundaryMode::periodic) return report;

    const Grid& grid = state.field.grid;
    const std::vector<double>& v = state.field.values;
    const int n = grid.count;
    const double peak = max_value(v);
    const double threshold = cfg.epsilon * peak;

    // sentinel knot nearest x_B = edge -/+ max kernel radius
    const int k = std::clamp<long>(
        std::lround(max_kernel_radius / grid.mesh - 0.5), 0, n - 1);
    const SideRules rules = side_rules(state.mode);

    auto breached = [&](SideRule rule, int sentinel, int edge) {
        if (rule == SideRule::wall) return v[sentinel] > threshold;
        return std::abs(v[edge] - state.companion.density) > threshold;
    };

    report.left = breached(rules.left, k, 0);
    report.right = breached(rules.right, n - 1 - k, n - 1);
    return report;
}

SolverState enlarge(const SolverState& state, const BreachReport& report,
                    const AdaptiveConfig& cfg) {
    if (!report.any())
        throw std::invalid_argument("enlarge called without a breach");

    const Grid& old = state.field.grid;
    const int n = old.count;
    if (2LL * n > cfg.max_count) {
        std::ostringstream os;
        os << "domain growth needs " << 2LL * n
           << " knots, above the configured cap " << cfg.max_count
           << "; raise adaptive max_n or start from a larger domain";
        throw ResourceError(os.str());
    }

    const SideRules rules = side_rules(state.mode);
    const std::vector<double>& v = state.field.values;
    const double left_fill = rules.left == SideRule::wall ? 0.0 : v.front();
    const double right_fill = rules.right == SideRule::wall ? 0.0 : v.back();

    // total length doubles: the breached side grows by L, or both by L/2
    int grow_left = 0, grow_right = 0;
    if (report.left && report.right) {
        grow_left = n / 2;
        grow_right = n / 2;
    } else if (report.left) {
        grow_left = n;
    } else {
        grow_right = n;
    }

    Grid grid = old;
    grid.count = 2 * n;
    grid.first = old.first - grow_left;

    SolverState next = state;
    next.field.grid = grid;
    next.field.values.clear();
    next.field.values.reserve(grid.count);
    next.field.values.insert(next.field.values.end(), grow_left, left_fill);
    next.field.values.insert(next.field.values.end(), v.begin(), v.end());
    next.field.values.insert(next.field.values.end(), grow_right, right_fill);
    return next;
}

const char* to_string(CompanionMode mode) {
    return mode == CompanionMode::analytic ? "analytic" : "rk_tracked";
}

} // namespace jumpcoal
