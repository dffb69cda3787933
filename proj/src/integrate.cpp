#include "jumpcoal/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "jumpcoal/adaptive.hpp"
#include "jumpcoal/errors.hpp"

namespace jumpcoal {

const char* to_string(StepperKind kind) {
    switch (kind) {
        case StepperKind::rk4: return "rk4";
        case StepperKind::rk2_heun: return "rk2_heun";
        case StepperKind::rk2_midpoint: return "rk2_midpoint";
    }
    return "?";
}

int stage_count(StepperKind kind) {
    return kind == StepperKind::rk4 ? 4 : 2;
}

namespace {

void check_finite(const std::vector<double>& v, const char* where,
                  double time) {
    if (!all_finite(v))
        throw DivergenceError(std::string("non-finite value in ") + where, -1,
                              time);
}

void evaluate(const RateFunction& rhs, const DensityField& field,
              RateField& rate, const char* stage, double time) {
    rate.grid = field.grid;
    rate.values.assign(field.values.size(), 0.0);
    rhs(field, rate);
    check_finite(rate.values, stage, time);
}

DensityField shifted(const DensityField& base, const RateField& rate,
                     double factor) {
    DensityField out{base.grid, base.values};
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += factor * rate.values[i];
    return out;
}

} // namespace

SolverState step(const SolverState& state, const RateFunction& rhs, double dt,
                 StepperKind kind) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

    const DensityField& y = state.field;
    SolverState next = state;
    next.time = state.time + dt;

    RateField k1, k2, k3, k4;
    switch (kind) {
        case StepperKind::rk4: {
            evaluate(rhs, y, k1, "stage 1", state.time);
            evaluate(rhs, shifted(y, k1, 0.5 * dt), k2, "stage 2",
                     state.time);
            evaluate(rhs, shifted(y, k2, 0.5 * dt), k3, "stage 3",
                     state.time);
            evaluate(rhs, shifted(y, k3, dt), k4, "stage 4", state.time);
            const double w = dt / 6.0;
            for (std::size_t i = 0; i < next.field.values.size(); ++i)
                next.field.values[i] =
                    y.values[i] + w * (k1.values[i] + 2.0 * k2.values[i] +
                                       2.0 * k3.values[i] + k4.values[i]);
            break;
        }
        case StepperKind::rk2_heun: {
            evaluate(rhs, y, k1, "stage 1", state.time);
            evaluate(rhs, shifted(y, k1, dt), k2, "stage 2", state.time);
            const double w = 0.5 * dt;
            for (std::size_t i = 0; i < next.field.values.size(); ++i)
                next.field.values[i] =
                    y.values[i] + w * (k1.values[i] + k2.values[i]);
            break;
        }
        case StepperKind::rk2_midpoint: {
            evaluate(rhs, y, k1, "stage 1", state.time);
            evaluate(rhs, shifted(y, k1, 0.5 * dt), k2, "stage 2",
                     state.time);
            for (std::size_t i = 0; i < next.field.values.size(); ++i)
                next.field.values[i] = y.values[i] + dt * k2.values[i];
            break;
        }
    }
    check_finite(next.field.values, "step result", state.time);
    return next;
}

IntegrateResult integrate(SolverState initial, const RateFunction& rhs,
                          const IntegrationConfig& cfg, StepperKind kind,
                          const SnapshotObserver& observer,
                          const PostStepHook& post_step, bool keep_snapshots,
                          std::vector<std::string>* warnings) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (cfg.t_end < 0.0)
        throw std::invalid_argument("t_end must be nonnegative");

    const double t0 = initial.time;
    const long steps = std::lround(cfg.t_end / cfg.dt);
    if (warnings &&
        std::abs(static_cast<double>(steps) * cfg.dt - cfg.t_end) >
            1e-9 * std::max(1.0, cfg.t_end)) {
        std::ostringstream os;
        os << "horizon " << cfg.t_end << " is not a whole number of steps; "
           << "integrating to " << static_cast<double>(steps) * cfg.dt;
        warnings->push_back(os.str());
    }

    std::set<long> snapshot_steps;
    for (double ts : cfg.snapshot_times) {
        long p = std::lround(ts / cfg.dt);
        p = std::clamp(p, 0L, steps);
        if (warnings &&
            std::abs(static_cast<double>(p) * cfg.dt - ts) >
                1e-9 * std::max(1.0, std::abs(ts))) {
            std::ostringstream os;
            os << "snapshot time " << ts << " snapped to step boundary "
               << static_cast<double>(p) * cfg.dt;
            warnings->push_back(os.str());
        }
        snapshot_steps.insert(p);
    }

    IntegrateResult result;
    auto emit = [&](const SolverState& s) {
        if (observer) observer(s);
        if (keep_snapshots)
            result.snapshots.push_back(SnapshotRecord{s.time, s.field});
    };

    SolverState state = std::move(initial);
    if (snapshot_steps.count(0)) emit(state);

    for (long p = 1; p <= steps; ++p) {
        try {
            state = step(state, rhs, cfg.dt, kind);
        } catch (const DivergenceError& e) {
            std::ostringstream os;
            os << e.what() << " at step " << p << " (t = "
               << t0 + static_cast<double>(p) * cfg.dt << ")";
            throw DivergenceError(os.str(), p,
                                  t0 + static_cast<double>(p) * cfg.dt);
        }
        state.time = t0 + static_cast<double>(p) * cfg.dt;
        state.companion = companion_advance(state.companion, cfg.dt, kind);
        if (post_step) post_step(state, p);
        if (snapshot_steps.count(p)) emit(state);
    }

    result.final_state = std::move(state);
    return result;
}

} // namespace jumpcoal
