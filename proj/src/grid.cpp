#include "jumpcoal/grid.hpp"

#include <cmath>
#include <sstream>

#include "jumpcoal/errors.hpp"

namespace jumpcoal {

Grid build_grid(double length, int count) {
    std::vector<std::string> issues;
    if (!(length > 0.0))
        issues.push_back("grid length must be positive, got " +
                         std::to_string(length));
    if (count < 4)
        issues.push_back("knot count must be at least 4, got " +
                         std::to_string(count));
    if (count % 2 != 0)
        issues.push_back("knot count must be even, got " +
                         std::to_string(count));
    if (!issues.empty()) throw ConfigError("invalid grid", issues);

    Grid g;
    g.mesh = length / count;
    g.count = count;
    g.first = -static_cast<long long>(count) / 2;
    return g;
}

const char* to_string(BoundaryMode mode) {
    switch (mode) {
        case BoundaryMode::periodic: return "periodic";
        case BoundaryMode::dirichlet: return "dirichlet";
        case BoundaryMode::asymptotic: return "asymptotic";
        case BoundaryMode::left_asymptotic_right_dirichlet:
            return "left_asymptotic_right_dirichlet";
        case BoundaryMode::left_dirichlet_right_asymptotic:
            return "left_dirichlet_right_asymptotic";
    }
    return "?";
}

double resolve_offset(std::span<const double> values, int i, int offset,
                      BoundaryMode mode) {
    const int n = static_cast<int>(values.size());
    if (i < 0 || i >= n)
        throw std::invalid_argument("resolve_offset: index out of range");
    if (std::abs(offset) >= (n + 1) / 2)
        throw std::invalid_argument(
            "resolve_offset: |offset| must stay below N/2 (truncation radius "
            "must satisfy R < L/2)");

    const int q = i + offset;
    if (q >= 0 && q < n) return values[q];

    switch (mode) {
        case BoundaryMode::periodic:
            return q < 0 ? values[q + n] : values[q - n];
        case BoundaryMode::dirichlet:
            return 0.0;
        case BoundaryMode::asymptotic:
            return q < 0 ? values[0] : values[n - 1];
        case BoundaryMode::left_asymptotic_right_dirichlet:
            return q < 0 ? values[0] : 0.0;
        case BoundaryMode::left_dirichlet_right_asymptotic:
            return q < 0 ? 0.0 : values[n - 1];
    }
    return 0.0;
}

const char* to_string(QuadratureRule rule) {
    switch (rule) {
        case QuadratureRule::trapezoid: return "trapezoid";
        case QuadratureRule::simpson: return "simpson";
        case QuadratureRule::unit: return "unit";
    }
    return "?";
}

WeightTable quadrature_weights(QuadratureRule rule, int jstar,
                               std::vector<std::string>* warnings) {
    if (jstar < 1)
        throw ConfigError("quadrature half-range must be at least 1, got " +
                          std::to_string(jstar));

    // Simpson needs at least two panels per half-range; fall back rather
    // than emit a degenerate pattern.
    if (rule == QuadratureRule::simpson && jstar == 1) {
        if (warnings)
            warnings->push_back(
                "simpson weights need a half-range of at least 2; "
                "using trapezoid for j* = 1");
        rule = QuadratureRule::trapezoid;
    }

    WeightTable table;
    table.rule = rule;
    table.values.assign(static_cast<std::size_t>(jstar) + 1, 1.0);

    switch (rule) {
        case QuadratureRule::unit:
            break;
        case QuadratureRule::trapezoid:
            table.values[jstar] = 0.5;
            break;
        case QuadratureRule::simpson:
            table.values[jstar] = 1.0 / 3.0;
            for (int j = jstar - 1; j >= 0; --j)
                table.values[j] =
                    ((jstar - j) % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
            break;
    }
    return table;
}

} // namespace jumpcoal
