#pragma once

#include <variant>
#include <vector>

#include "jumpcoal/field.hpp"
#include "jumpcoal/grid.hpp"

namespace jumpcoal {

enum class KernelShape { gaussian, rectangle };

const char* to_string(KernelShape shape);

/// Parametric interaction kernel: a normalized Gaussian or rectangle of mass
/// mu and range sigma, optionally split into the symmetric pair
/// (f(x-s) + f(x+s)) / 2. mu = 0 disables the interaction.
struct KernelSpec {
    KernelShape shape = KernelShape::gaussian;
    double mu = 0.0;
    double sigma = 1.0;
    double shift = 0.0;

    bool enabled() const { return mu > 0.0; }

    bool operator==(const KernelSpec&) const = default;
};

/// Throws ConfigError unless mu >= 0, sigma > 0, shift >= 0.
void validate_kernel(const KernelSpec& spec, const char* role = "kernel");

/// Kernel value at x. Even in x bit for bit; rectangle edges |x| = sigma are
/// inclusive so grid-aligned discontinuities sample reproducibly.
double eval_kernel(const KernelSpec& spec, double x);

/// Distance beyond which the kernel is treated as zero:
/// 6 sigma + shift for Gaussians, sigma + shift for rectangles, 0 if disabled.
double truncation_radius(const KernelSpec& spec);

// --- initial condition families ---------------------------------------------

/// Rectangle profile C_{v,sigma}: v/(2 sigma) on |x| <= sigma.
struct RectangleProfile {
    double amplitude = 1.0;
    double range = 1.0;

    bool operator==(const RectangleProfile&) const = default;
};

/// Sum of rectangles C_{v_k,sigma_k}(x + s_k) with
/// s_k = -L/2 + (k - 1/2) L / N0; N0 is the list length.
struct MultiRectangleProfile {
    std::vector<double> amplitudes;
    std::vector<double> ranges;

    bool operator==(const MultiRectangleProfile&) const = default;
};

/// n0 (1 + mu0 cos(2 pi k x / L)); k a positive integer so the profile is
/// L-periodic.
struct TrigonometricProfile {
    double level = 1.0;
    double modulation = 1.0;
    int frequency = 1;

    bool operator==(const TrigonometricProfile&) const = default;
};

/// Step profile: level on x <= 0, zero on x > 0 (flipped when mirrored).
struct HeavisideProfile {
    double level = 1.0;
    bool mirrored = false;

    bool operator==(const HeavisideProfile&) const = default;
};

/// Gaussian G_{mu,sigma} used directly as a density.
struct GaussianProfile {
    double mass = 1.0;
    double range = 1.0;

    bool operator==(const GaussianProfile&) const = default;
};

struct ConstantProfile {
    double level = 1.0;

    bool operator==(const ConstantProfile&) const = default;
};

using InitialCondition =
    std::variant<RectangleProfile, MultiRectangleProfile, TrigonometricProfile,
                 HeavisideProfile, GaussianProfile, ConstantProfile>;

const char* initial_condition_name(const InitialCondition& ic);

/// True for profiles with jump discontinuities (rectangles, steps).
bool initial_condition_discontinuous(const InitialCondition& ic);

/// Throws ConfigError on invalid parameters (negative amplitudes,
/// modulation outside (0, 1], non-positive ranges, ...).
void validate_initial(const InitialCondition& ic);

/// Initial density at position x. Multi-rectangle shifts and the
/// trigonometric period are taken from the grid length.
double eval_initial(const InitialCondition& ic, const Grid& grid, double x);

/// Field with n_i = n(x_i, 0) at the grid knots.
DensityField sample_initial(const InitialCondition& ic, const Grid& grid);

} // namespace jumpcoal
