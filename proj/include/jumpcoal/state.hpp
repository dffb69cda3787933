#pragma once

#include "jumpcoal/field.hpp"
#include "jumpcoal/grid.hpp"

namespace jumpcoal {

enum class CompanionMode { analytic, rk_tracked };

const char* to_string(CompanionMode mode);

/// Scalar track of the spatially flat solution n^h(t) = n0 / (1 + mu_b n0 t),
/// advanced either by the closed form or by the run's own Runge-Kutta stepper.
/// Used as the asymptotic-boundary deviation reference.
struct HomogeneousCompanion {
    double density = 0.0;
    double initial = 0.0;
    double coalescence_mu = 0.0;
    double time = 0.0;
    CompanionMode mode = CompanionMode::rk_tracked;
};

/// Everything the time loop advances.
struct SolverState {
    double time = 0.0;
    DensityField field;
    BoundaryMode mode = BoundaryMode::periodic;
    HomogeneousCompanion companion;
};

} // namespace jumpcoal
