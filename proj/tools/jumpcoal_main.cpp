#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jumpcoal/diagnostics.hpp"
#include "jumpcoal/errors.hpp"
#include "jumpcoal/run.hpp"
#include "jumpcoal/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using namespace jumpcoal;

fs::path output_root() {
    if (const char* env = std::getenv("JUMPCOAL_OUTPUT_ROOT"))
        return fs::path(env);
    return fs::path("out");
}

int report_config_error(const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const std::string& issue : e.issues())
        std::cerr << "  - " << issue << "\n";
    return static_cast<int>(RunStatus::validation_error);
}

int do_run(const std::string& target, std::optional<std::string> out) {
    Scenario s = load_scenario(target);
    const fs::path dir = out ? fs::path(*out) : output_root() / s.name;

    RunOutcome outcome = run_scenario(s, dir);
    for (const std::string& w : outcome.warnings)
        std::cerr << "warning: " << w << "\n";
    for (const std::string& e : outcome.events) std::cout << e << "\n";

    if (outcome.status == RunStatus::ok) {
        const TimeseriesRow& last = outcome.series.back();
        std::cout << "done: t = " << last.time << ", mass = " << last.mass
                  << ", max = " << last.max << "\n";
        std::cout << "outputs in " << dir.string() << "\n";
    } else {
        std::cerr << "run failed: " << outcome.message << "\n";
        if (!outcome.files.empty())
            std::cerr << "partial outputs in " << dir.string() << "\n";
    }
    return static_cast<int>(outcome.status);
}

int do_sweep(const std::string& target, std::vector<double> hs,
             std::vector<double> dts, double ref_h, double ref_dt,
             bool quad_bench) {
    Scenario s = load_scenario(target);
    SweepReport report = sweep_errors(s, hs, dts, ref_h, ref_dt);
    std::cout << report.table();

    if (quad_bench) {
        std::cout << "# single-integration benchmark (unit Gaussian over "
                     "[-6, 6])\n";
        for (QuadratureRule rule :
             {QuadratureRule::simpson, QuadratureRule::trapezoid}) {
            std::vector<std::pair<double, double>> pts;
            for (double h : hs) {
                const double err = single_integration_error(rule, h);
                std::cout << "# " << to_string(rule) << " h = " << h
                          << ": rel err " << err << "\n";
                if (err > 0.0) pts.emplace_back(h, err);
            }
            if (pts.size() >= 2)
                std::cout << "# " << to_string(rule)
                          << " slope: " << fit_loglog_slope(pts) << "\n";
        }
    }
    return 0;
}

int do_compare(const std::string& target) {
    Scenario s = load_scenario(target);
    CompareReport report = compare_paths(s);
    std::cout << report.table();
    return 0;
}

int do_list() {
    for (const auto& [name, preset] : presets())
        std::cout << name << "\t" << preset.description << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "jumpcoal: deterministic solver for a one-dimensional "
        "repulsion-jump-coalescence kinetic equation"};
    app.require_subcommand(1);

    std::string target;
    std::optional<std::string> out_dir;
    auto* run_cmd =
        app.add_subcommand("run", "integrate a scenario file or preset");
    run_cmd->add_option("scenario", target, "scenario file or preset name")
        ->required();
    run_cmd->add_option("--out", out_dir, "output directory");

    std::vector<double> hs, dts;
    double ref_h = 0.0, ref_dt = 0.0;
    bool quad_bench = false;
    auto* sweep_cmd = app.add_subcommand(
        "sweep-errors", "error sweep against a finer reference run");
    sweep_cmd->add_option("scenario", target, "scenario file or preset name")
        ->required();
    sweep_cmd->add_option("--h", hs, "mesh values")->required();
    sweep_cmd->add_option("--dt", dts, "time step values")->required();
    sweep_cmd->add_option("--ref-h", ref_h, "reference mesh")->required();
    sweep_cmd->add_option("--ref-dt", ref_dt, "reference time step")
        ->required();
    sweep_cmd->add_flag("--quad-bench", quad_bench,
                        "also benchmark the bare quadrature rules");

    auto* compare_cmd = app.add_subcommand(
        "compare-paths", "direct vs spectral right-hand side");
    compare_cmd->add_option("scenario", target, "scenario file or preset name")
        ->required();

    auto* list_cmd = app.add_subcommand("list-presets", "list built-in "
                                                        "scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return do_run(target, out_dir);
        if (sweep_cmd->parsed())
            return do_sweep(target, hs, dts, ref_h, ref_dt, quad_bench);
        if (compare_cmd->parsed()) return do_compare(target);
        if (list_cmd->parsed()) return do_list();
    } catch (const ConfigError& e) {
        return report_config_error(e);
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(RunStatus::divergence);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(RunStatus::resource_limit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
