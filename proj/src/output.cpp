#include "jumpcoal/output.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "jumpcoal/errors.hpp"

namespace jumpcoal {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string snapshot_filename(int idx, double time) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "snap_%04d_t%g.tsv", idx, time);
    return buf;
}

double write_snapshot(const std::filesystem::path& path,
                      const DensityField& field, double time,
                      std::uint64_t hash) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write snapshot file " +
                                 path.string());

    const double pre_clamp_min = min_value(field.values);
    char hash_hex[32];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016" PRIx64, hash);

    out << "# jumpcoal snapshot\n";
    out << "# scenario_hash = " << hash_hex << "\n";
    out << "# t = " << fmt(time) << "\n";
    out << "# L = " << fmt(field.grid.length()) << "\n";
    out << "# N = " << field.grid.count << "\n";
    out << "# h = " << fmt(field.grid.mesh) << "\n";
    out << "# first = " << field.grid.first << "\n";
    out << "# min_before_clamp = " << fmt(pre_clamp_min) << "\n";
    for (int i = 0; i < field.grid.count; ++i) {
        const double v = std::max(0.0, field.values[i]);
        out << fmt(field.grid.knot(i)) << "\t" << fmt(v) << "\n";
    }
    if (!out) throw std::runtime_error("short write on " + path.string());
    return pre_clamp_min;
}

DensityField read_snapshot(const std::filesystem::path& path,
                           double* time_out) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read snapshot file " + path.string());

    Grid grid;
    bool have_n = false, have_h = false, have_first = false;
    std::vector<double> values;

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::istringstream ls(line.substr(1));
            std::string key, eq;
            ls >> key >> eq;
            if (eq != "=") continue;
            if (key == "t" && time_out) {
                ls >> *time_out;
            } else if (key == "N") {
                ls >> grid.count;
                have_n = true;
            } else if (key == "h") {
                ls >> grid.mesh;
                have_h = true;
            } else if (key == "first") {
                ls >> grid.first;
                have_first = true;
            }
            continue;
        }
        std::istringstream ls(line);
        double x, v;
        if (!(ls >> x >> v))
            throw std::runtime_error("malformed snapshot row in " +
                                     path.string() + ": '" + line + "'");
        values.push_back(v);
    }

    if (!have_n || !have_h || !have_first)
        throw std::runtime_error("snapshot header incomplete in " +
                                 path.string());
    if (static_cast<int>(values.size()) != grid.count)
        throw std::runtime_error("snapshot row count does not match N in " +
                                 path.string());
    return DensityField{grid, std::move(values)};
}

void write_timeseries(const std::filesystem::path& path,
                      const std::vector<TimeseriesRow>& rows) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write time series " + path.string());
    out << "# t\tmass\tmin\tmax\tmax_abs_rhs\n";
    for (const TimeseriesRow& r : rows)
        out << fmt(r.time) << "\t" << fmt(r.mass) << "\t" << fmt(r.min)
            << "\t" << fmt(r.max) << "\t" << fmt(r.max_abs_rhs) << "\n";
}

void write_manifest(const std::filesystem::path& path, const Scenario& s,
                    const std::vector<std::string>& events,
                    const std::vector<std::string>& warnings,
                    double min_density_observed, double effective_t_end,
                    long steps, const std::string& status) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write manifest " + path.string());

    char hash_hex[32];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016" PRIx64,
                  scenario_hash(s));

    out << "# jumpcoal run manifest\n";
    out << "# scenario = " << s.name << "\n";
    out << "# hash = " << hash_hex << "\n";
    out << "# status = " << status << "\n";
    out << "# effective_t_end = " << fmt(effective_t_end) << "\n";
    out << "# steps = " << steps << "\n";
    out << "# min_density_observed = " << fmt(min_density_observed)
        << "  (output files clamp negatives to zero)\n";
    for (const std::string& e : events) out << "# event: " << e << "\n";
    for (const std::string& w : warnings) out << "# warning: " << w << "\n";
    out << "#\n# The section below is the fully resolved scenario; feeding\n"
           "# this file back to `jumpcoal run` reproduces the run.\n\n";
    out << canonical_text(s);
}

} // namespace jumpcoal
