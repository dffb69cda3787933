#include "jumpcoal/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jumpcoal/errors.hpp"
#include "jumpcoal/rhs.hpp"

namespace jumpcoal {

const char* to_string(RhsPath path) {
    return path == RhsPath::direct ? "direct" : "spectral";
}

std::vector<double> Scenario::effective_snapshots() const {
    if (!snapshot_times.empty()) return snapshot_times;
    return {0.0, t_end};
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt(v[i]);
    }
    return out;
}

struct Parser {
    std::vector<std::string> errors;

    void fail(int line, const std::string& msg) {
        errors.push_back("line " + std::to_string(line) + ": " + msg);
    }

    bool parse_double(const std::string& value, int line, const char* key,
                      double& out) {
        try {
            std::size_t used = 0;
            out = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument("");
            return true;
        } catch (...) {
            fail(line, std::string(key) + ": expected a number, got '" +
                           value + "'");
            return false;
        }
    }

    bool parse_int(const std::string& value, int line, const char* key,
                   long long& out) {
        try {
            std::size_t used = 0;
            out = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument("");
            return true;
        } catch (...) {
            fail(line, std::string(key) + ": expected an integer, got '" +
                           value + "'");
            return false;
        }
    }

    bool parse_bool(const std::string& value, int line, const char* key,
                    bool& out) {
        const std::string v = lower(value);
        if (v == "true" || v == "yes" || v == "on" || v == "1") {
            out = true;
            return true;
        }
        if (v == "false" || v == "no" || v == "off" || v == "0") {
            out = false;
            return true;
        }
        fail(line, std::string(key) + ": expected true/false, got '" + value +
                       "'");
        return false;
    }

    bool parse_list(const std::string& value, int line, const char* key,
                    std::vector<double>& out) {
        out.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            double v;
            if (!parse_double(item, line, key, v)) return false;
            out.push_back(v);
        }
        if (out.empty()) {
            fail(line, std::string(key) + ": expected a comma-separated list");
            return false;
        }
        return true;
    }
};

} // namespace

Scenario parse_scenario(std::string_view text, std::string_view name) {
    Scenario s;
    s.name = std::string(name);

    Parser p;
    std::string section;
    int line_no = 0;

    // [initial] keys are collected first: the profile type decides how they
    // are interpreted
    std::map<std::string, std::pair<std::string, int>> initial_keys;

    std::stringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                p.fail(line_no, "malformed section header '" + line + "'");
                continue;
            }
            section = lower(trim(line.substr(1, line.size() - 2)));
            static const char* known[] = {"grid",       "boundary",
                                          "kernel.a",   "kernel.b",
                                          "kernel.phi", "initial",
                                          "integration", "adaptive",
                                          "output"};
            if (std::find_if(std::begin(known), std::end(known),
                             [&](const char* k) { return section == k; }) ==
                std::end(known))
                p.fail(line_no, "unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            p.fail(line_no, "expected key = value, got '" + line + "'");
            continue;
        }
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            p.fail(line_no, "empty key or value in '" + line + "'");
            continue;
        }

        auto unknown_key = [&] {
            p.fail(line_no, "unknown key '" + key + "' in section [" +
                                section + "]");
        };

        if (section == "grid") {
            if (key == "l" || key == "length") {
                p.parse_double(value, line_no, "l", s.length);
            } else if (key == "n" || key == "count") {
                long long n;
                if (p.parse_int(value, line_no, "n", n))
                    s.count = static_cast<int>(n);
            } else {
                unknown_key();
            }
        } else if (section == "boundary") {
            if (key == "mode") {
                const std::string v = lower(value);
                if (v == "periodic") s.mode = BoundaryMode::periodic;
                else if (v == "dirichlet") s.mode = BoundaryMode::dirichlet;
                else if (v == "asymptotic") s.mode = BoundaryMode::asymptotic;
                else if (v == "left_asymptotic_right_dirichlet")
                    s.mode = BoundaryMode::left_asymptotic_right_dirichlet;
                else if (v == "left_dirichlet_right_asymptotic")
                    s.mode = BoundaryMode::left_dirichlet_right_asymptotic;
                else
                    p.fail(line_no, "unknown boundary mode '" + value + "'");
            } else {
                unknown_key();
            }
        } else if (section == "kernel.a" || section == "kernel.b" ||
                   section == "kernel.phi") {
            KernelSpec& spec = section == "kernel.a"
                                   ? s.jump
                                   : (section == "kernel.b" ? s.coalescence
                                                            : s.repulsion);
            if (key == "shape") {
                const std::string v = lower(value);
                if (v == "gaussian") spec.shape = KernelShape::gaussian;
                else if (v == "rectangle") spec.shape = KernelShape::rectangle;
                else p.fail(line_no, "unknown kernel shape '" + value + "'");
            } else if (key == "mu") {
                p.parse_double(value, line_no, "mu", spec.mu);
            } else if (key == "sigma") {
                p.parse_double(value, line_no, "sigma", spec.sigma);
            } else if (key == "shift") {
                p.parse_double(value, line_no, "shift", spec.shift);
            } else {
                unknown_key();
            }
        } else if (section == "initial") {
            initial_keys[key] = {value, line_no};
        } else if (section == "integration") {
            if (key == "stepper") {
                const std::string v = lower(value);
                if (v == "rk4") s.stepper = StepperKind::rk4;
                else if (v == "rk2" || v == "rk2_heun")
                    s.stepper = StepperKind::rk2_heun;
                else if (v == "rk2_midpoint")
                    s.stepper = StepperKind::rk2_midpoint;
                else p.fail(line_no, "unknown stepper '" + value + "'");
            } else if (key == "dt") {
                p.parse_double(value, line_no, "dt", s.dt);
            } else if (key == "t_end") {
                p.parse_double(value, line_no, "t_end", s.t_end);
            } else if (key == "snapshots") {
                p.parse_list(value, line_no, "snapshots", s.snapshot_times);
            } else if (key == "quadrature") {
                const std::string v = lower(value);
                if (v == "simpson") s.rule = QuadratureRule::simpson;
                else if (v == "trapezoid") s.rule = QuadratureRule::trapezoid;
                else if (v == "unit") s.rule = QuadratureRule::unit;
                else
                    p.fail(line_no, "unknown quadrature rule '" + value + "'");
            } else if (key == "rhs") {
                const std::string v = lower(value);
                if (v == "direct") s.path = RhsPath::direct;
                else if (v == "spectral") s.path = RhsPath::spectral;
                else p.fail(line_no, "unknown rhs path '" + value + "'");
            } else {
                unknown_key();
            }
        } else if (section == "adaptive") {
            if (key == "enabled") {
                p.parse_bool(value, line_no, "enabled", s.adaptive.enabled);
            } else if (key == "epsilon") {
                p.parse_double(value, line_no, "epsilon", s.adaptive.epsilon);
            } else if (key == "max_n") {
                p.parse_int(value, line_no, "max_n", s.adaptive.max_count);
            } else if (key == "companion") {
                const std::string v = lower(value);
                if (v == "analytic") s.companion_mode = CompanionMode::analytic;
                else if (v == "rk_tracked")
                    s.companion_mode = CompanionMode::rk_tracked;
                else p.fail(line_no, "unknown companion mode '" + value + "'");
            } else {
                unknown_key();
            }
        } else if (section == "output") {
            if (key == "directory") {
                s.output.directory = value;
            } else if (key == "region_homogeneous" ||
                       key == "region_inhomogeneous") {
                std::vector<double> pair;
                if (p.parse_list(value, line_no, key.c_str(), pair)) {
                    if (pair.size() != 2) {
                        p.fail(line_no, key + ": expected 'lo, hi'");
                    } else {
                        Region r{pair[0], pair[1]};
                        if (key == "region_homogeneous")
                            s.output.homogeneous_region = r;
                        else
                            s.output.inhomogeneous_region = r;
                    }
                }
            } else {
                unknown_key();
            }
        } else {
            p.fail(line_no, "key '" + key + "' outside any known section");
        }
    }

    // resolve the initial-condition profile
    if (!initial_keys.empty()) {
        auto take = [&](const char* key) -> std::optional<std::pair<std::string, int>> {
            auto it = initial_keys.find(key);
            if (it == initial_keys.end()) return std::nullopt;
            auto v = it->second;
            initial_keys.erase(it);
            return v;
        };

        std::string type = "constant";
        int type_line = 0;
        if (auto t = take("type")) {
            type = lower(t->first);
            type_line = t->second;
        }

        if (type == "rectangle") {
            RectangleProfile r;
            if (auto v = take("v"))
                p.parse_double(v->first, v->second, "v", r.amplitude);
            if (auto v = take("sigma"))
                p.parse_double(v->first, v->second, "sigma", r.range);
            s.initial = r;
        } else if (type == "multi_rectangle") {
            MultiRectangleProfile m;
            if (auto v = take("amplitudes"))
                p.parse_list(v->first, v->second, "amplitudes", m.amplitudes);
            if (auto v = take("ranges"))
                p.parse_list(v->first, v->second, "ranges", m.ranges);
            s.initial = m;
        } else if (type == "trigonometric") {
            TrigonometricProfile t;
            if (auto v = take("n0"))
                p.parse_double(v->first, v->second, "n0", t.level);
            if (auto v = take("mu0"))
                p.parse_double(v->first, v->second, "mu0", t.modulation);
            if (auto v = take("k")) {
                long long k;
                if (p.parse_int(v->first, v->second, "k", k))
                    t.frequency = static_cast<int>(k);
            }
            s.initial = t;
        } else if (type == "heaviside") {
            HeavisideProfile h;
            if (auto v = take("n0"))
                p.parse_double(v->first, v->second, "n0", h.level);
            if (auto v = take("mirrored"))
                p.parse_bool(v->first, v->second, "mirrored", h.mirrored);
            s.initial = h;
        } else if (type == "gaussian") {
            GaussianProfile g;
            if (auto v = take("mu"))
                p.parse_double(v->first, v->second, "mu", g.mass);
            if (auto v = take("sigma"))
                p.parse_double(v->first, v->second, "sigma", g.range);
            s.initial = g;
        } else if (type == "constant") {
            ConstantProfile c;
            if (auto v = take("n0"))
                p.parse_double(v->first, v->second, "n0", c.level);
            s.initial = c;
        } else {
            p.fail(type_line, "unknown initial condition type '" + type + "'");
        }

        for (const auto& [key, kv] : initial_keys)
            p.fail(kv.second, "key '" + key +
                                  "' does not belong to initial condition "
                                  "type '" + type + "'");
    }

    for (const std::string& issue : validate_scenario(s)) p.errors.push_back(issue);

    if (!p.errors.empty())
        throw ConfigError("scenario '" + s.name + "' is invalid", p.errors);
    return s;
}

std::vector<std::string> validate_scenario(const Scenario& s) {
    std::vector<std::string> issues;
    auto add = [&](const std::string& m) { issues.push_back(m); };

    if (!(s.length > 0.0)) add("grid: length must be positive");
    if (s.count < 4 || s.count % 2 != 0)
        add("grid: knot count must be an even integer >= 4");

    auto check_kernel = [&](const KernelSpec& k, const char* role) {
        try {
            validate_kernel(k, role);
        } catch (const ConfigError& e) {
            for (const auto& i : e.issues()) add(i);
            return;
        }
        if (k.enabled() && s.length > 0.0 &&
            truncation_radius(k) >= s.length / 2.0)
            add(std::string(role) + ": truncation radius " +
                fmt(truncation_radius(k)) + " must stay below L/2 = " +
                fmt(s.length / 2.0) + "; enlarge the domain");
    };
    check_kernel(s.jump, "kernel.a");
    check_kernel(s.coalescence, "kernel.b");
    check_kernel(s.repulsion, "kernel.phi");

    try {
        validate_initial(s.initial);
    } catch (const ConfigError& e) {
        for (const auto& i : e.issues()) add("initial: " + i);
    }

    if (!(s.dt > 0.0)) add("integration: dt must be positive");
    if (s.t_end < 0.0) add("integration: t_end must be nonnegative");
    for (double ts : s.snapshot_times)
        if (ts < 0.0 || ts > s.t_end + 1e-9 * std::max(1.0, s.t_end))
            add("integration: snapshot time " + fmt(ts) +
                " outside [0, t_end]");

    if (s.path == RhsPath::spectral) {
        if (s.mode != BoundaryMode::periodic)
            add("integration: the spectral path requires periodic "
                "boundaries");
        if (s.coalescence.enabled())
            add("integration: the spectral path requires a disabled "
                "coalescence kernel (mu_b = 0)");
    }

    if (s.adaptive.enabled) {
        if (s.mode == BoundaryMode::periodic)
            add("adaptive: size adjustment cannot be combined with periodic "
                "boundaries (the period is a model property)");
        if (!(s.adaptive.epsilon > 0.0 && s.adaptive.epsilon < 1.0))
            add("adaptive: epsilon must lie in (0, 1)");
        if (s.adaptive.max_count < s.count)
            add("adaptive: max_n must be at least the initial knot count");
    }

    const bool heaviside = std::holds_alternative<HeavisideProfile>(s.initial);
    if (s.mode == BoundaryMode::left_asymptotic_right_dirichlet ||
        s.mode == BoundaryMode::left_dirichlet_right_asymptotic) {
        if (!heaviside) {
            add("boundary: the combined modes are meant for step initial "
                "profiles (heaviside)");
        } else {
            const bool mirrored =
                std::get<HeavisideProfile>(s.initial).mirrored;
            if (s.mode == BoundaryMode::left_asymptotic_right_dirichlet &&
                mirrored)
                add("boundary: a mirrored step needs "
                    "left_dirichlet_right_asymptotic");
            if (s.mode == BoundaryMode::left_dirichlet_right_asymptotic &&
                !mirrored)
                add("boundary: a non-mirrored step needs "
                    "left_asymptotic_right_dirichlet");
        }
    }
    if (heaviside && s.mode == BoundaryMode::periodic)
        add("initial: a step profile is not periodic; use a combined "
            "boundary mode");

    if (const auto* t = std::get_if<TrigonometricProfile>(&s.initial);
        t && s.mode != BoundaryMode::periodic)
        add("initial: trigonometric profiles need periodic boundaries");

    return issues;
}

std::vector<std::string> scenario_warnings(const Scenario& s) {
    std::vector<std::string> w;
    if (s.path == RhsPath::spectral && initial_condition_discontinuous(s.initial))
        w.push_back(
            "spectral path with a discontinuous initial profile: the "
            "convolution-theorem evaluation can lose accuracy at jumps");
    const double steps = s.t_end / s.dt;
    if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps))
        w.push_back("t_end is not a whole number of steps; it will be "
                    "snapped");
    return w;
}

std::string canonical_text(const Scenario& s) {
    std::ostringstream os;
    os << "[grid]\n";
    os << "l = " << fmt(s.length) << "\n";
    os << "n = " << s.count << "\n\n";

    os << "[boundary]\n";
    os << "mode = " << to_string(s.mode) << "\n\n";

    auto kernel_section = [&](const char* name, const KernelSpec& k) {
        os << "[" << name << "]\n";
        os << "shape = " << to_string(k.shape) << "\n";
        os << "mu = " << fmt(k.mu) << "\n";
        os << "sigma = " << fmt(k.sigma) << "\n";
        os << "shift = " << fmt(k.shift) << "\n\n";
    };
    kernel_section("kernel.a", s.jump);
    kernel_section("kernel.b", s.coalescence);
    kernel_section("kernel.phi", s.repulsion);

    os << "[initial]\n";
    os << "type = " << initial_condition_name(s.initial) << "\n";
    if (const auto* r = std::get_if<RectangleProfile>(&s.initial)) {
        os << "v = " << fmt(r->amplitude) << "\n";
        os << "sigma = " << fmt(r->range) << "\n";
    } else if (const auto* m = std::get_if<MultiRectangleProfile>(&s.initial)) {
        os << "amplitudes = " << fmt_list(m->amplitudes) << "\n";
        os << "ranges = " << fmt_list(m->ranges) << "\n";
    } else if (const auto* t = std::get_if<TrigonometricProfile>(&s.initial)) {
        os << "n0 = " << fmt(t->level) << "\n";
        os << "mu0 = " << fmt(t->modulation) << "\n";
        os << "k = " << t->frequency << "\n";
    } else if (const auto* h = std::get_if<HeavisideProfile>(&s.initial)) {
        os << "n0 = " << fmt(h->level) << "\n";
        os << "mirrored = " << (h->mirrored ? "true" : "false") << "\n";
    } else if (const auto* g = std::get_if<GaussianProfile>(&s.initial)) {
        os << "mu = " << fmt(g->mass) << "\n";
        os << "sigma = " << fmt(g->range) << "\n";
    } else if (const auto* c = std::get_if<ConstantProfile>(&s.initial)) {
        os << "n0 = " << fmt(c->level) << "\n";
    }
    os << "\n";

    os << "[integration]\n";
    os << "stepper = " << to_string(s.stepper) << "\n";
    os << "dt = " << fmt(s.dt) << "\n";
    os << "t_end = " << fmt(s.t_end) << "\n";
    if (!s.snapshot_times.empty())
        os << "snapshots = " << fmt_list(s.snapshot_times) << "\n";
    os << "quadrature = " << to_string(s.rule) << "\n";
    os << "rhs = " << to_string(s.path) << "\n\n";

    os << "[adaptive]\n";
    os << "enabled = " << (s.adaptive.enabled ? "true" : "false") << "\n";
    os << "epsilon = " << fmt(s.adaptive.epsilon) << "\n";
    os << "max_n = " << s.adaptive.max_count << "\n";
    os << "companion = " << to_string(s.companion_mode) << "\n\n";

    os << "[output]\n";
    os << "directory = " << s.output.directory << "\n";
    if (s.output.homogeneous_region)
        os << "region_homogeneous = " << fmt(s.output.homogeneous_region->lo)
           << ", " << fmt(s.output.homogeneous_region->hi) << "\n";
    if (s.output.inhomogeneous_region)
        os << "region_inhomogeneous = "
           << fmt(s.output.inhomogeneous_region->lo) << ", "
           << fmt(s.output.inhomogeneous_region->hi) << "\n";
    return os.str();
}

std::uint64_t scenario_hash(const Scenario& s) {
    const std::string text = canonical_text(s);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Scenario load_scenario(const std::string& name_or_path) {
    const auto& table = presets();
    if (auto it = table.find(name_or_path); it != table.end()) {
        Scenario s = parse_scenario(it->second.text, name_or_path);
        return s;
    }
    std::ifstream in(name_or_path);
    if (!in)
        throw ConfigError("'" + name_or_path +
                          "' is neither a preset nor a readable file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string stem =
        std::filesystem::path(name_or_path).stem().string();
    return parse_scenario(buffer.str(), stem.empty() ? "scenario" : stem);
}

} // namespace jumpcoal
