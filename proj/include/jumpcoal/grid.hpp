#pragma once

#include <span>
#include <string>
#include <vector>

namespace jumpcoal {

/// Uniform midpoint grid over [left, left + N*h].
///
/// Knots are anchored to a global integer lattice: knot i sits at
/// h * (first + i + 1/2). A centered grid has first = -N/2, which reproduces
/// x_i = -L/2 + (i + 1/2) h and makes knot positions exactly symmetric about
/// zero. Domain growth extends the lattice without touching retained knot
/// coordinates bit for bit.
struct Grid {
    double mesh = 0.0;     ///< h
    int count = 0;         ///< N, even
    long long first = 0;   ///< lattice index of the leftmost knot

    double knot(int i) const {
        return mesh * (static_cast<double>(first + i) + 0.5);
    }
    double length() const { return mesh * count; }
    double left_edge() const { return mesh * static_cast<double>(first); }
    double right_edge() const {
        return mesh * static_cast<double>(first + count);
    }

    bool operator==(const Grid&) const = default;
};

/// Centered grid of N knots over [-length/2, length/2].
/// Requires length > 0 and N even, N >= 4.
Grid build_grid(double length, int count);

/// Out-of-range index resolution for the truncated stencil sums.
enum class BoundaryMode {
    periodic,
    dirichlet,
    asymptotic,
    left_asymptotic_right_dirichlet,
    left_dirichlet_right_asymptotic,
};

const char* to_string(BoundaryMode mode);

/// Value of n_{i+offset} with spills resolved according to mode.
/// i is 0-based, |offset| < N/2.
double resolve_offset(std::span<const double> values, int i, int offset,
                      BoundaryMode mode);

enum class QuadratureRule { trapezoid, simpson, unit };

const char* to_string(QuadratureRule rule);

/// Half-range weights xi_0 .. xi_{j*} for the symmetric kernel sums.
///
/// Trapezoid and Simpson satisfy xi_0 + 2 sum_{j>=1} xi_j = 2 j* exactly.
/// The unit rule (all ones) is the plain Riemann sum used by oracle
/// comparisons against the untruncated reference evaluator; it does not
/// satisfy the normalization identity.
struct WeightTable {
    QuadratureRule rule = QuadratureRule::simpson;
    std::vector<double> values;

    int half_range() const { return static_cast<int>(values.size()) - 1; }
};

/// Builds the weight table for half-range j* >= 1.
/// Simpson with j* = 1 degenerates; it falls back to trapezoid and, when a
/// warnings sink is given, records a note.
WeightTable quadrature_weights(QuadratureRule rule, int jstar,
                               std::vector<std::string>* warnings = nullptr);

} // namespace jumpcoal
