#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jumpcoal/integrate.hpp"
#include "jumpcoal/output.hpp"
#include "jumpcoal/scenario.hpp"

namespace jumpcoal {

enum class RunStatus : int {
    ok = 0,
    validation_error = 2,
    divergence = 3,
    resource_limit = 4,
};

struct RunOutcome {
    RunStatus status = RunStatus::ok;
    std::string message;

    SolverState final_state;
    std::vector<SnapshotRecord> snapshots;
    std::vector<TimeseriesRow> series;

    std::vector<std::string> warnings;
    std::vector<std::string> events;
    double min_density_observed = 0.0;
    std::vector<std::filesystem::path> files;

    bool ok() const { return status == RunStatus::ok; }
};

/// Validates, assembles and integrates one scenario. With an output directory
/// the snapshot files, time series and manifest are written there (partial
/// outputs are flushed on divergence); without one the run stays in memory.
RunOutcome run_scenario(const Scenario& s,
                        const std::optional<std::filesystem::path>& out_dir =
                            std::nullopt,
                        bool keep_snapshots = true);

/// Copy of s with the mesh changed to h (knot count L/h, which must come out
/// even) and optionally a different step or stepper.
Scenario with_resolution(const Scenario& s, double h,
                         std::optional<double> dt = std::nullopt,
                         std::optional<StepperKind> stepper = std::nullopt);

struct SweepCell {
    double h = 0.0;
    double dt = 0.0;
    bool ok = false;
    std::string error;
    std::optional<double> theta_homogeneous;
    std::optional<double> theta_inhomogeneous;
};

struct SweepReport {
    double ref_h = 0.0, ref_dt = 0.0;
    std::vector<SweepCell> cells;
    /// log-log slope of theta against h down each dt column (and against dt
    /// across each h row), per region; entries are (fixed value, slope).
    std::vector<std::pair<double, double>> h_slopes_inhomogeneous;
    std::vector<std::pair<double, double>> dt_slopes_inhomogeneous;

    std::string table() const;
};

/// Error sweep against a finer reference run: runs the base scenario at every
/// (h, dt) combination and reports theta at the final time over the
/// scenario's comparison regions. The reference must be at least as fine on
/// both axes and strictly finer on one.
SweepReport sweep_errors(const Scenario& base, const std::vector<double>& hs,
                         const std::vector<double>& dts, double ref_h,
                         double ref_dt);

struct CompareReport {
    double rhs_max_diff = 0.0;       ///< initial-field rate difference
    std::vector<std::pair<double, double>> trajectory_diffs; ///< (t, max diff)
    double direct_eval_seconds = 0.0;
    double spectral_eval_seconds = 0.0;

    double timing_ratio() const {
        return spectral_eval_seconds > 0.0
                   ? direct_eval_seconds / spectral_eval_seconds
                   : 0.0;
    }
    std::string table() const;
};

/// Runs the scenario through both right-hand-side paths and reports the
/// max-norm differences and per-evaluation timings. The scenario must be
/// eligible for the spectral path (periodic, coalescence off).
CompareReport compare_paths(const Scenario& s);

} // namespace jumpcoal
