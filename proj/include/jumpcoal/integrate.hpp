#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jumpcoal/field.hpp"
#include "jumpcoal/state.hpp"

namespace jumpcoal {

enum class StepperKind { rk4, rk2_heun, rk2_midpoint };

const char* to_string(StepperKind kind);

/// Rate evaluations per step: 4 for RK4, 2 for both RK2 variants.
int stage_count(StepperKind kind);

using RateFunction = std::function<void(const DensityField&, RateField&)>;

struct IntegrationConfig {
    double dt = 0.1;
    double t_end = 10.0;
    std::vector<double> snapshot_times;
};

/// One fixed step of the chosen Runge-Kutta scheme. Advances time by exactly
/// dt; the companion is advanced by the caller. Throws DivergenceError when a
/// stage produces a non-finite value.
SolverState step(const SolverState& state, const RateFunction& rhs, double dt,
                 StepperKind kind);

struct SnapshotRecord {
    double time = 0.0;
    DensityField field;
};

struct IntegrateResult {
    SolverState final_state;
    std::vector<SnapshotRecord> snapshots;
};

using SnapshotObserver = std::function<void(const SolverState&)>;
/// Runs after every accepted step; may replace the state wholesale
/// (domain growth does).
using PostStepHook = std::function<void(SolverState&, long step_index)>;

/// Fixed-step loop over t = p dt, p = 0..P with P = round(t_end/dt).
/// Snapshot times are snapped to the nearest step boundary (with a note when
/// they do not land on one). The companion is advanced each step with the
/// same stepper. Observers run at snapshot times; exceptions from them abort
/// the run cleanly. Deterministic for identical inputs.
IntegrateResult integrate(SolverState initial, const RateFunction& rhs,
                          const IntegrationConfig& cfg, StepperKind kind,
                          const SnapshotObserver& observer = {},
                          const PostStepHook& post_step = {},
                          bool keep_snapshots = true,
                          std::vector<std::string>* warnings = nullptr);

} // namespace jumpcoal
