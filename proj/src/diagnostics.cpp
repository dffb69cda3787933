#include "jumpcoal/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "jumpcoal/errors.hpp"

namespace jumpcoal {

double total_mass(const DensityField& field) {
    double sum = 0.0;
    for (double v : field.values) sum += v;
    return field.grid.mesh * sum;
}

namespace {

// true when both grids sit on the same lattice (equal mesh, integer-aligned)
bool same_lattice(const Grid& a, const Grid& b) {
    return a.mesh == b.mesh;
}

// cubic (4-point) Lagrange interpolation of the reference at position x;
// returns false when x is outside the covered range
bool interpolate(const DensityField& ref, double x, double& out) {
    const Grid& g = ref.grid;
    const int n = g.count;
    const double u = (x - g.left_edge()) / g.mesh - 0.5; // knot-space coord
    if (u < 0.0 || u > static_cast<double>(n - 1)) return false;

    int k = static_cast<int>(std::floor(u));
    k = std::clamp(k, 1, n - 3); // stencil k-1 .. k+2
    const double t = u - k;

    const double ym1 = ref.values[k - 1];
    const double y0 = ref.values[k];
    const double y1 = ref.values[k + 1];
    const double y2 = ref.values[k + 2];

    const double c0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double c1 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    const double c2 = -(t + 1.0) * t * (t - 2.0) / 2.0;
    const double c3 = (t + 1.0) * t * (t - 1.0) / 6.0;
    out = c0 * ym1 + c1 * y0 + c2 * y1 + c3 * y2;
    return true;
}

} // namespace

ErrorReport theta(const DensityField& candidate, const DensityField& reference,
                  const Region& region) {
    if (region.hi < region.lo)
        throw ConfigError("theta: empty comparison region");

    const Grid& g = candidate.grid;
    const bool aligned = same_lattice(g, reference.grid);

    ErrorReport report;
    report.first_index = g.count; // until the first hit
    double num = 0.0, den = 0.0;

    for (int i = 0; i < g.count; ++i) {
        const double x = g.knot(i);
        if (x < region.lo || x > region.hi) continue;

        double ref_value;
        if (aligned) {
            const long long j = (g.first + i) - reference.grid.first;
            if (j < 0 || j >= reference.grid.count) continue;
            ref_value = reference.values[static_cast<int>(j)];
        } else {
            if (!interpolate(reference, x, ref_value)) continue;
        }

        num += std::abs(candidate.values[i] - ref_value);
        den += ref_value;
        report.first_index = std::min(report.first_index, i);
        report.last_index = i;
        ++report.points;
    }

    if (report.points == 0)
        throw ConfigError(
            "theta: no comparable knots in the region (grids do not overlap "
            "there)");
    if (den == 0.0)
        throw ConfigError(
            "theta: reference sums to zero over the region; the relative "
            "metric is undefined");

    report.theta_percent = num / den * 100.0;
    return report;
}

double symmetry_defect(const DensityField& field) {
    const int n = field.grid.count;
    double defect = 0.0;
    for (int i = 0; i < n; ++i)
        defect = std::max(defect,
                          std::abs(field.values[i] - field.values[n - 1 - i]));
    return defect;
}

double fit_loglog_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2)
        throw ConfigError("slope fit needs at least two points");
    for (const auto& [scale, error] : points)
        if (!(scale > 0.0) || !(error > 0.0))
            throw ConfigError(
                "slope fit needs positive scales and errors");

    double sx = 0.0, sy = 0.0;
    for (const auto& [scale, error] : points) {
        sx += std::log(scale);
        sy += std::log(error);
    }
    const double n = static_cast<double>(points.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [scale, error] : points) {
        const double dx = std::log(scale) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(error) - my);
    }
    if (sxx == 0.0) throw ConfigError("slope fit needs distinct scales");
    return sxy / sxx;
}

double single_integration_error(QuadratureRule rule, double mesh) {
    if (!(mesh > 0.0)) throw ConfigError("mesh must be positive");
    const int jstar = static_cast<int>(std::lround(6.0 / mesh));
    if (jstar < 2) throw ConfigError("mesh too coarse for the benchmark");

    // long double throughout: the Simpson truncation error reaches ~1e-16
    // at h = 0.01 and double accumulation noise would bury it
    const long double h = static_cast<long double>(mesh);
    const auto g = [](long double x) -> long double {
        const long double inv_sqrt_2pi =
            0.3989422804014326779399460599343818684759L;
        return inv_sqrt_2pi * expl(-0.5L * x * x);
    };

    WeightTable table = quadrature_weights(rule, jstar);
    long double sum = static_cast<long double>(table.values[0]) * g(0.0L);
    for (int j = 1; j <= jstar; ++j)
        sum += 2.0L * static_cast<long double>(table.values[j]) *
               g(static_cast<long double>(j) * h);

    const long double approx = h * sum;
    const long double exact = erfl(6.0L / sqrtl(2.0L));
    return static_cast<double>(fabsl(approx - exact) / exact);
}

} // namespace jumpcoal
