#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "jumpcoal/grid.hpp"

namespace jumpcoal {

/// Density values n_i at the grid knots at one instant.
struct DensityField {
    Grid grid;
    std::vector<double> values;
};

/// Time derivatives dn_i/dt on the same knots.
struct RateField {
    Grid grid;
    std::vector<double> values;
};

inline DensityField make_field(const Grid& grid, double fill = 0.0) {
    return DensityField{grid, std::vector<double>(grid.count, fill)};
}

inline double min_value(const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}

inline double max_value(const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace jumpcoal
