#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jumpcoal/adaptive.hpp"
#include "jumpcoal/diagnostics.hpp"
#include "jumpcoal/integrate.hpp"
#include "jumpcoal/kernels.hpp"
#include "jumpcoal/state.hpp"

namespace jumpcoal {

enum class RhsPath { direct, spectral };

const char* to_string(RhsPath path);

struct OutputConfig {
    std::string directory = "out";
    std::optional<Region> homogeneous_region;
    std::optional<Region> inhomogeneous_region;

    bool operator==(const OutputConfig&) const = default;
};

/// Full description of one run. Defaults follow the reference setup:
/// Simpson weights, RK4 at dt = 0.1, periodic boundaries, epsilon = 1e-12.
struct Scenario {
    std::string name = "scenario";

    double length = 20.0;
    int count = 160;

    BoundaryMode mode = BoundaryMode::periodic;

    KernelSpec jump{KernelShape::gaussian, 0.0, 1.0, 0.0};
    KernelSpec coalescence{KernelShape::gaussian, 0.0, 1.0, 0.0};
    KernelSpec repulsion{KernelShape::gaussian, 0.0, 1.0, 0.0};

    InitialCondition initial = ConstantProfile{1.0};

    StepperKind stepper = StepperKind::rk4;
    double dt = 0.1;
    double t_end = 10.0;
    std::vector<double> snapshot_times; ///< empty -> {0, t_end}

    QuadratureRule rule = QuadratureRule::simpson;
    RhsPath path = RhsPath::direct;

    AdaptiveConfig adaptive;
    CompanionMode companion_mode = CompanionMode::rk_tracked;

    OutputConfig output;

    double mesh() const { return length / count; }
    std::vector<double> effective_snapshots() const;

    bool operator==(const Scenario&) const = default;
};

/// Parses the INI-style scenario format. Collects every violation (unknown
/// keys, type mismatches, constraint violations), each with its line number,
/// and throws ConfigError carrying the whole list.
Scenario parse_scenario(std::string_view text,
                        std::string_view name = "scenario");

/// Cross-field constraint checks; returns all violations (empty when valid).
std::vector<std::string> validate_scenario(const Scenario& s);

/// Non-fatal observations (discontinuous initial condition on the spectral
/// path, snapshot snapping, ...).
std::vector<std::string> scenario_warnings(const Scenario& s);

/// Canonical resolved form: every effective parameter including defaults,
/// re-parseable into an identical Scenario.
std::string canonical_text(const Scenario& s);

/// FNV-1a hash of the canonical text; stamped into output headers.
std::uint64_t scenario_hash(const Scenario& s);

struct Preset {
    std::string description;
    std::string text;
};

/// Built-in scenarios reproducing the published figure setups.
const std::map<std::string, Preset>& presets();

/// Loads a preset by name or parses a scenario file from disk.
Scenario load_scenario(const std::string& name_or_path);

} // namespace jumpcoal
