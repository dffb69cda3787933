#include "jumpcoal/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jumpcoal/errors.hpp"

namespace jumpcoal {

namespace {

double single_kernel(KernelShape shape, double mu, double sigma, double x) {
    switch (shape) {
        case KernelShape::gaussian:
            return mu / std::sqrt(2.0 * std::numbers::pi * sigma * sigma) *
                   std::exp(-(x * x) / (2.0 * sigma * sigma));
        case KernelShape::rectangle:
            // inclusive edge: grid-aligned discontinuities sample
            // reproducibly
            return std::abs(x) <= sigma ? mu / (2.0 * sigma) : 0.0;
    }
    return 0.0;
}

} // namespace

const char* to_string(KernelShape shape) {
    return shape == KernelShape::gaussian ? "gaussian" : "rectangle";
}

void validate_kernel(const KernelSpec& spec, const char* role) {
    if (spec.mu >= 0.0 && spec.sigma > 0.0 && spec.shift >= 0.0) return;

    std::vector<std::string> issues;
    const std::string prefix = std::string(role) + ": ";
    if (!(spec.mu >= 0.0)) issues.push_back(prefix + "mu must be nonnegative");
    if (!(spec.sigma > 0.0))
        issues.push_back(prefix + "sigma must be positive");
    if (!(spec.shift >= 0.0))
        issues.push_back(prefix + "shift must be nonnegative");
    throw ConfigError("invalid kernel parameters", issues);
}

double eval_kernel(const KernelSpec& spec, double x) {
    validate_kernel(spec);
    if (!spec.enabled()) return 0.0;
    // evaluating through |x| keeps evenness exact whatever the codegen does
    const double ax = std::abs(x);
    if (spec.shift == 0.0)
        return single_kernel(spec.shape, spec.mu, spec.sigma, ax);
    return 0.5 * (single_kernel(spec.shape, spec.mu, spec.sigma,
                                ax - spec.shift) +
                  single_kernel(spec.shape, spec.mu, spec.sigma,
                                ax + spec.shift));
}

double truncation_radius(const KernelSpec& spec) {
    validate_kernel(spec);
    if (!spec.enabled()) return 0.0;
    const double q = spec.shape == KernelShape::gaussian ? 6.0 : 1.0;
    return q * spec.sigma + spec.shift;
}

const char* initial_condition_name(const InitialCondition& ic) {
    struct Visitor {
        const char* operator()(const RectangleProfile&) { return "rectangle"; }
        const char* operator()(const MultiRectangleProfile&) {
            return "multi_rectangle";
        }
        const char* operator()(const TrigonometricProfile&) {
            return "trigonometric";
        }
        const char* operator()(const HeavisideProfile&) { return "heaviside"; }
        const char* operator()(const GaussianProfile&) { return "gaussian"; }
        const char* operator()(const ConstantProfile&) { return "constant"; }
    };
    return std::visit(Visitor{}, ic);
}

bool initial_condition_discontinuous(const InitialCondition& ic) {
    return std::holds_alternative<RectangleProfile>(ic) ||
           std::holds_alternative<MultiRectangleProfile>(ic) ||
           std::holds_alternative<HeavisideProfile>(ic);
}

void validate_initial(const InitialCondition& ic) {
    std::vector<std::string> issues;
    auto check = [&](bool ok, const char* msg) {
        if (!ok) issues.emplace_back(msg);
    };

    if (const auto* r = std::get_if<RectangleProfile>(&ic)) {
        check(r->amplitude >= 0.0, "rectangle: amplitude must be nonnegative");
        check(r->range > 0.0, "rectangle: range must be positive");
    } else if (const auto* m = std::get_if<MultiRectangleProfile>(&ic)) {
        check(!m->amplitudes.empty(),
              "multi_rectangle: needs at least one amplitude");
        check(m->ranges.size() == m->amplitudes.size(),
              "multi_rectangle: amplitudes and ranges must have equal length");
        for (double v : m->amplitudes)
            check(v >= 0.0, "multi_rectangle: amplitudes must be nonnegative");
        for (double s : m->ranges)
            check(s > 0.0, "multi_rectangle: ranges must be positive");
    } else if (const auto* t = std::get_if<TrigonometricProfile>(&ic)) {
        check(t->level >= 0.0, "trigonometric: level must be nonnegative");
        check(t->modulation > 0.0 && t->modulation <= 1.0,
              "trigonometric: modulation must lie in (0, 1]");
        check(t->frequency >= 1,
              "trigonometric: frequency must be a positive integer "
              "(periodicity on the domain would be violated otherwise)");
    } else if (const auto* h = std::get_if<HeavisideProfile>(&ic)) {
        check(h->level >= 0.0, "heaviside: level must be nonnegative");
    } else if (const auto* g = std::get_if<GaussianProfile>(&ic)) {
        check(g->mass >= 0.0, "gaussian: mass must be nonnegative");
        check(g->range > 0.0, "gaussian: range must be positive");
    } else if (const auto* c = std::get_if<ConstantProfile>(&ic)) {
        check(c->level >= 0.0, "constant: level must be nonnegative");
    }

    if (!issues.empty())
        throw ConfigError("invalid initial condition", issues);
}

double eval_initial(const InitialCondition& ic, const Grid& grid, double x) {
    const double length = grid.length();

    if (const auto* r = std::get_if<RectangleProfile>(&ic)) {
        return std::abs(x) <= r->range ? r->amplitude / (2.0 * r->range)
                                       : 0.0;
    }
    if (const auto* m = std::get_if<MultiRectangleProfile>(&ic)) {
        const auto n0 = static_cast<double>(m->amplitudes.size());
        double sum = 0.0;
        for (std::size_t k = 0; k < m->amplitudes.size(); ++k) {
            const double sk = -length / 2.0 +
                              (static_cast<double>(k) + 0.5) * length / n0;
            const double arg = x + sk;
            if (std::abs(arg) <= m->ranges[k])
                sum += m->amplitudes[k] / (2.0 * m->ranges[k]);
        }
        return sum;
    }
    if (const auto* t = std::get_if<TrigonometricProfile>(&ic)) {
        const double wave = 2.0 * std::numbers::pi * t->frequency / length;
        return t->level * (1.0 + t->modulation * std::cos(wave * x));
    }
    if (const auto* h = std::get_if<HeavisideProfile>(&ic)) {
        if (h->mirrored) return x >= 0.0 ? h->level : 0.0;
        return x <= 0.0 ? h->level : 0.0;
    }
    if (const auto* g = std::get_if<GaussianProfile>(&ic)) {
        return single_kernel(KernelShape::gaussian, g->mass, g->range,
                             std::abs(x));
    }
    return std::get<ConstantProfile>(ic).level;
}

DensityField sample_initial(const InitialCondition& ic, const Grid& grid) {
    validate_initial(ic);
    DensityField field = make_field(grid);
    for (int i = 0; i < grid.count; ++i)
        field.values[i] = eval_initial(ic, grid, grid.knot(i));
    return field;
}

} // namespace jumpcoal
