#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "jumpcoal/field.hpp"
#include "jumpcoal/scenario.hpp"

namespace jumpcoal {

/// One row of the per-snapshot time series.
struct TimeseriesRow {
    double time = 0.0;
    double mass = 0.0;
    double min = 0.0;
    double max = 0.0;
    double max_abs_rhs = 0.0;
};

/// Writes one snapshot: '#' metadata header (scenario hash, t, L, N, h,
/// lattice anchor), then x<TAB>n rows at 17 significant digits. Negative
/// round-off densities are clamped to zero in the file only; the pre-clamp
/// minimum goes into the header and is returned.
double write_snapshot(const std::filesystem::path& path,
                      const DensityField& field, double time,
                      std::uint64_t hash);

/// Reads a snapshot back; the written (clamped) field round-trips bit for
/// bit. Optionally returns the snapshot time.
DensityField read_snapshot(const std::filesystem::path& path,
                           double* time_out = nullptr);

void write_timeseries(const std::filesystem::path& path,
                      const std::vector<TimeseriesRow>& rows);

/// Run manifest: the canonical scenario text plus a [run] section with the
/// effective horizon, hash, observed density minimum, growth events and
/// warnings. Re-running the manifest reproduces the run byte for byte.
void write_manifest(const std::filesystem::path& path, const Scenario& s,
                    const std::vector<std::string>& events,
                    const std::vector<std::string>& warnings,
                    double min_density_observed, double effective_t_end,
                    long steps, const std::string& status);

/// Deterministic snapshot file name for the idx-th snapshot at time t.
std::string snapshot_filename(int idx, double time);

} // namespace jumpcoal
