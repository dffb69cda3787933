#pragma once

#include <span>
#include <utility>

#include "jumpcoal/field.hpp"
#include "jumpcoal/grid.hpp"

namespace jumpcoal {

/// h * sum_i n_i. Plain Riemann sum: exact under periodic boundaries with the
/// midpoint knot rule, and the quantity the discrete conservation identities
/// hold for.
double total_mass(const DensityField& field);

/// Physical comparison window [lo, hi].
struct Region {
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const Region&) const = default;
};

struct ErrorReport {
    double theta_percent = 0.0;
    int first_index = 0;   ///< candidate index range actually compared
    int last_index = -1;
    int points = 0;        ///< number of knots in the sum
};

/// Relative absolute deviation sum |n_i - ref_i| / sum ref_i * 100 [%] over
/// the candidate knots inside the region.
///
/// A reference on the same lattice is compared knot by knot; a finer-mesh
/// reference is interpolated to the candidate knots with 4-point (cubic)
/// Lagrange interpolation. Knots the reference does not cover are skipped.
/// Throws ConfigError when no points overlap or the reference sum vanishes.
ErrorReport theta(const DensityField& candidate, const DensityField& reference,
                  const Region& region);

/// max_i |n_i - n_{N+1-i}|: deviation from even symmetry about the grid
/// center (zero for centered symmetric profiles).
double symmetry_defect(const DensityField& field);

/// Least-squares slope of log(error) against log(scale).
/// All scales and errors must be positive; at least two points.
double fit_loglog_slope(std::span<const std::pair<double, double>> points);

/// Relative deviation of the composite quadrature of the unit Gaussian over
/// [-6, 6] from the exact value, at mesh h. Accumulates in long double: the
/// Simpson truncation error reaches 1e-16 at h = 0.01, below double summation
/// noise.
double single_integration_error(QuadratureRule rule, double mesh);

} // namespace jumpcoal
