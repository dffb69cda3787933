#include "jumpcoal/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "jumpcoal/adaptive.hpp"
#include "jumpcoal/diagnostics.hpp"
#include "jumpcoal/errors.hpp"
#include "jumpcoal/rhs.hpp"
#include "jumpcoal/spectral.hpp"

namespace jumpcoal {

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

/// Rate evaluator bound to the current grid; domain growth rebinds it.
class Engine {
public:
    virtual ~Engine() = default;
    virtual void evaluate(const DensityField& f, RateField& r) = 0;
    virtual void rebind(const Grid& grid) = 0;
};

class DirectEngine final : public Engine {
public:
    DirectEngine(const Scenario& s, const Grid& grid,
                 std::vector<std::string>* warnings)
        : jump_(s.jump), coalescence_(s.coalescence), repulsion_(s.repulsion),
          rule_(s.rule), mode_(s.mode) {
        ws_ = build_workspace(jump_, coalescence_, repulsion_, grid, rule_,
                              warnings);
    }

    void evaluate(const DensityField& f, RateField& r) override {
        r = compute_rhs(f, ws_, mode_);
    }

    void rebind(const Grid& grid) override {
        ws_ = build_workspace(jump_, coalescence_, repulsion_, grid, rule_,
                              nullptr);
    }

private:
    KernelSpec jump_, coalescence_, repulsion_;
    QuadratureRule rule_;
    BoundaryMode mode_;
    SampledKernels ws_;
};

class SpectralEngine final : public Engine {
public:
    SpectralEngine(const Scenario& s, const Grid& grid)
        : jump_(s.jump), repulsion_(s.repulsion),
          ws_(SpectralWorkspace::build(s.jump, s.repulsion, grid)) {
        if (s.coalescence.enabled())
            throw ConfigError(
                "the spectral path requires a disabled coalescence kernel");
        if (s.mode != BoundaryMode::periodic)
            throw ConfigError(
                "the spectral path requires periodic boundaries");
    }

    void evaluate(const DensityField& f, RateField& r) override {
        r = ws_.evaluate(f);
    }

    void rebind(const Grid& grid) override {
        ws_ = SpectralWorkspace::build(jump_, repulsion_, grid);
    }

private:
    KernelSpec jump_, repulsion_;
    SpectralWorkspace ws_;
};

double max_enabled_radius(const Scenario& s) {
    double r = 0.0;
    for (const KernelSpec* k : {&s.jump, &s.coalescence, &s.repulsion})
        if (k->enabled()) r = std::max(r, truncation_radius(*k));
    return r;
}

HomogeneousCompanion make_companion(const Scenario& s, const Grid& grid,
                                    const InitialCondition& ic) {
    HomogeneousCompanion c;
    const bool right_flat =
        s.mode == BoundaryMode::left_dirichlet_right_asymptotic;
    const double edge_x = right_flat ? grid.right_edge() : grid.left_edge();
    c.initial = eval_initial(ic, grid, edge_x);
    c.density = c.initial;
    c.coalescence_mu = s.coalescence.mu;
    c.mode = s.companion_mode;
    return c;
}

} // namespace

RunOutcome run_scenario(const Scenario& s,
                        const std::optional<std::filesystem::path>& out_dir,
                        bool keep_snapshots) {
    RunOutcome outcome;

    const std::vector<std::string> issues = validate_scenario(s);
    if (!issues.empty()) {
        outcome.status = RunStatus::validation_error;
        outcome.message = join(issues, "; ");
        return outcome;
    }
    outcome.warnings = scenario_warnings(s);

    const Grid grid = build_grid(s.length, s.count);
    SolverState state;
    state.mode = s.mode;
    state.field = sample_initial(s.initial, grid);
    state.companion = make_companion(s, grid, s.initial);
    outcome.min_density_observed = min_value(state.field.values);

    std::unique_ptr<Engine> engine;
    try {
        if (s.path == RhsPath::spectral)
            engine = std::make_unique<SpectralEngine>(s, grid);
        else
            engine = std::make_unique<DirectEngine>(s, grid,
                                                    &outcome.warnings);
    } catch (const ConfigError& e) {
        outcome.status = RunStatus::validation_error;
        outcome.message = e.what();
        for (const auto& i : e.issues()) outcome.message += "; " + i;
        return outcome;
    }

    const double max_radius = max_enabled_radius(s);
    const std::uint64_t hash = scenario_hash(s);

    if (out_dir) std::filesystem::create_directories(*out_dir);

    RateFunction rhs = [&engine](const DensityField& f, RateField& r) {
        engine->evaluate(f, r);
    };

    int snapshot_index = 0;
    SnapshotObserver observer = [&](const SolverState& st) {
        RateField rate;
        engine->evaluate(st.field, rate);
        TimeseriesRow row;
        row.time = st.time;
        row.mass = total_mass(st.field);
        row.min = min_value(st.field.values);
        row.max = max_value(st.field.values);
        row.max_abs_rhs = max_abs(rate.values);
        outcome.series.push_back(row);
        if (out_dir) {
            const auto path =
                *out_dir / snapshot_filename(snapshot_index, st.time);
            write_snapshot(path, st.field, st.time, hash);
            outcome.files.push_back(path);
        }
        ++snapshot_index;
    };

    PostStepHook hook = [&](SolverState& st, long) {
        outcome.min_density_observed = std::min(
            outcome.min_density_observed, min_value(st.field.values));
        if (!s.adaptive.enabled) return;
        const BreachReport report =
            breach_check(st, max_radius, s.adaptive);
        if (!report.any()) return;
        const double old_length = st.field.grid.length();
        st = enlarge(st, report, s.adaptive);
        engine->rebind(st.field.grid);
        std::ostringstream os;
        os << "t = " << st.time << ": domain grew "
           << (report.left && report.right
                   ? "both sides"
                   : (report.left ? "left" : "right"))
           << ", L " << old_length << " -> " << st.field.grid.length()
           << " (N = " << st.field.grid.count << ")";
        outcome.events.push_back(os.str());
    };

    IntegrationConfig cfg{s.dt, s.t_end, s.effective_snapshots()};
    const long steps = std::lround(s.t_end / s.dt);
    std::string status = "ok";

    try {
        IntegrateResult result =
            integrate(std::move(state), rhs, cfg, s.stepper, observer, hook,
                      keep_snapshots, &outcome.warnings);
        outcome.final_state = std::move(result.final_state);
        outcome.snapshots = std::move(result.snapshots);
    } catch (const DivergenceError& e) {
        outcome.status = RunStatus::divergence;
        outcome.message = e.what();
        status = "divergence";
    } catch (const ResourceError& e) {
        outcome.status = RunStatus::resource_limit;
        outcome.message = e.what();
        status = "resource_limit";
    }

    if (out_dir) {
        const auto series_path = *out_dir / "timeseries.tsv";
        write_timeseries(series_path, outcome.series);
        outcome.files.push_back(series_path);
        const auto manifest_path = *out_dir / "manifest.txt";
        write_manifest(manifest_path, s, outcome.events, outcome.warnings,
                       outcome.min_density_observed,
                       static_cast<double>(steps) * s.dt, steps, status);
        outcome.files.push_back(manifest_path);
    }
    return outcome;
}

Scenario with_resolution(const Scenario& s, double h,
                         std::optional<double> dt,
                         std::optional<StepperKind> stepper) {
    if (!(h > 0.0)) throw ConfigError("mesh must be positive");
    const double n_real = s.length / h;
    const long n = std::lround(n_real);
    if (std::abs(n_real - static_cast<double>(n)) > 1e-9 * n_real ||
        n < 4 || n % 2 != 0)
        throw ConfigError("mesh " + std::to_string(h) +
                          " does not divide the domain into an even knot "
                          "count");
    Scenario out = s;
    out.count = static_cast<int>(n);
    if (dt) out.dt = *dt;
    if (stepper) out.stepper = *stepper;
    return out;
}

namespace {

Region default_region(const Scenario& s) {
    return Region{-s.length / 2.0, s.length / 2.0};
}

} // namespace

SweepReport sweep_errors(const Scenario& base, const std::vector<double>& hs,
                         const std::vector<double>& dts, double ref_h,
                         double ref_dt) {
    if (hs.empty() || dts.empty())
        throw ConfigError("sweep needs at least one h and one dt");
    const double min_h = *std::min_element(hs.begin(), hs.end());
    const double min_dt = *std::min_element(dts.begin(), dts.end());
    if (ref_h > min_h || ref_dt > min_dt || (ref_h == min_h && ref_dt == min_dt))
        throw ConfigError(
            "the reference must be at least as fine as every sweep point and "
            "strictly finer on one axis");

    SweepReport report;
    report.ref_h = ref_h;
    report.ref_dt = ref_dt;

    Scenario ref_scenario = with_resolution(base, ref_h, ref_dt);
    RunOutcome ref = run_scenario(ref_scenario, std::nullopt, false);
    if (!ref.ok())
        throw ConfigError("reference run failed: " + ref.message);

    const Region inhom = base.output.inhomogeneous_region
                             ? *base.output.inhomogeneous_region
                             : default_region(base);

    for (double h : hs) {
        for (double dt : dts) {
            SweepCell cell;
            cell.h = h;
            cell.dt = dt;
            try {
                Scenario variant = with_resolution(base, h, dt);
                RunOutcome run = run_scenario(variant, std::nullopt, false);
                if (!run.ok()) throw ConfigError(run.message);
                cell.theta_inhomogeneous =
                    theta(run.final_state.field, ref.final_state.field, inhom)
                        .theta_percent;
                if (base.output.homogeneous_region)
                    cell.theta_homogeneous =
                        theta(run.final_state.field, ref.final_state.field,
                              *base.output.homogeneous_region)
                            .theta_percent;
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.ok = false;
                cell.error = e.what();
            }
            report.cells.push_back(cell);
        }
    }

    // slope of theta(h) down each dt column, and of theta(dt) across each h
    // row, where at least two clean positive cells exist
    auto fit = [](std::vector<std::pair<double, double>>& pts)
        -> std::optional<double> {
        std::erase_if(pts, [](const auto& p) { return !(p.second > 0.0); });
        if (pts.size() < 2) return std::nullopt;
        return fit_loglog_slope(pts);
    };
    for (double dt : dts) {
        std::vector<std::pair<double, double>> pts;
        for (const SweepCell& c : report.cells)
            if (c.ok && c.dt == dt && c.theta_inhomogeneous)
                pts.emplace_back(c.h, *c.theta_inhomogeneous);
        if (auto slope = fit(pts))
            report.h_slopes_inhomogeneous.emplace_back(dt, *slope);
    }
    for (double h : hs) {
        std::vector<std::pair<double, double>> pts;
        for (const SweepCell& c : report.cells)
            if (c.ok && c.h == h && c.theta_inhomogeneous)
                pts.emplace_back(c.dt, *c.theta_inhomogeneous);
        if (auto slope = fit(pts))
            report.dt_slopes_inhomogeneous.emplace_back(h, *slope);
    }
    return report;
}

std::string SweepReport::table() const {
    std::ostringstream os;
    os << "# error sweep against reference h = " << ref_h
       << ", dt = " << ref_dt << "\n";
    os << "# h\tdt\ttheta_inhom[%]\ttheta_hom[%]\n";
    for (const SweepCell& c : cells) {
        os << c.h << "\t" << c.dt << "\t";
        if (!c.ok) {
            os << "failed: " << c.error << "\n";
            continue;
        }
        os << (c.theta_inhomogeneous ? std::to_string(*c.theta_inhomogeneous)
                                     : std::string("-"));
        os << "\t";
        os << (c.theta_homogeneous ? std::to_string(*c.theta_homogeneous)
                                   : std::string("-"));
        os << "\n";
    }
    for (const auto& [dt, slope] : h_slopes_inhomogeneous)
        os << "# theta(h) slope at dt = " << dt << ": " << slope << "\n";
    for (const auto& [h, slope] : dt_slopes_inhomogeneous)
        os << "# theta(dt) slope at h = " << h << ": " << slope << "\n";
    return os.str();
}

namespace {

double time_evaluations(const std::function<void()>& eval) {
    using clock = std::chrono::steady_clock;
    eval(); // warm up
    double best = 1e300;
    int reps = 1;
    for (int round = 0; round < 6; ++round) {
        const auto begin = clock::now();
        for (int r = 0; r < reps; ++r) eval();
        const double elapsed =
            std::chrono::duration<double>(clock::now() - begin).count();
        best = std::min(best, elapsed / reps);
        if (elapsed < 0.02) reps *= 4; // too short to trust; rerun longer
    }
    return best;
}

} // namespace

CompareReport compare_paths(const Scenario& s) {
    std::vector<std::string> issues = validate_scenario(s);
    if (s.mode != BoundaryMode::periodic)
        issues.push_back("path comparison requires periodic boundaries");
    if (s.coalescence.enabled())
        issues.push_back(
            "path comparison requires a disabled coalescence kernel");
    if (!issues.empty())
        throw ConfigError("scenario not eligible for both paths", issues);

    const Grid grid = build_grid(s.length, s.count);
    const DensityField initial = sample_initial(s.initial, grid);

    SampledKernels direct_ws = build_workspace(
        s.jump, s.coalescence, s.repulsion, grid, s.rule, nullptr);
    SpectralWorkspace spectral_ws =
        SpectralWorkspace::build(s.jump, s.repulsion, grid);

    CompareReport report;

    const RateField r_direct = compute_rhs(initial, direct_ws, s.mode);
    RateField r_spectral = spectral_ws.evaluate(initial);
    double d0 = 0.0;
    for (int i = 0; i < grid.count; ++i)
        d0 = std::max(d0,
                      std::abs(r_direct.values[i] - r_spectral.values[i]));
    report.rhs_max_diff = d0;

    // full trajectories through both paths
    IntegrationConfig cfg{s.dt, s.t_end, s.effective_snapshots()};
    auto trajectory = [&](const RateFunction& rhs) {
        SolverState st;
        st.mode = s.mode;
        st.field = initial;
        return integrate(std::move(st), rhs, cfg, s.stepper);
    };
    IntegrateResult direct_run =
        trajectory([&](const DensityField& f, RateField& r) {
            r = compute_rhs(f, direct_ws, s.mode);
        });
    IntegrateResult spectral_run =
        trajectory([&](const DensityField& f, RateField& r) {
            r = spectral_ws.evaluate(f);
        });

    for (std::size_t k = 0; k < direct_run.snapshots.size(); ++k) {
        const auto& a = direct_run.snapshots[k].field.values;
        const auto& b = spectral_run.snapshots[k].field.values;
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            d = std::max(d, std::abs(a[i] - b[i]));
        report.trajectory_diffs.emplace_back(direct_run.snapshots[k].time, d);
    }

    report.direct_eval_seconds = time_evaluations(
        [&] { compute_rhs(initial, direct_ws, s.mode); });
    report.spectral_eval_seconds =
        time_evaluations([&] { spectral_ws.evaluate(initial); });
    return report;
}

std::string CompareReport::table() const {
    std::ostringstream os;
    os << "# direct vs spectral right-hand side\n";
    os << "initial rhs max diff: " << rhs_max_diff << "\n";
    for (const auto& [t, d] : trajectory_diffs)
        os << "t = " << t << ": trajectory max diff " << d << "\n";
    os << "per-evaluation time: direct " << direct_eval_seconds
       << " s, spectral " << spectral_eval_seconds << " s (ratio "
       << timing_ratio() << ")\n";
    return os.str();
}

} // namespace jumpcoal
