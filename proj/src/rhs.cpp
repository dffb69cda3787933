#include "jumpcoal/rhs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jumpcoal/errors.hpp"

namespace jumpcoal {

namespace {

// ceil(R/h) with a guard against R/h landing just above an integer through
// rounding of the quotient
int truncation_index(double radius, double mesh) {
    return static_cast<int>(std::ceil(radius / mesh - 1e-9));
}

std::vector<double> sample_offsets(const KernelSpec& spec, double mesh,
                                   int jmax, int stride) {
    std::vector<double> s(static_cast<std::size_t>(jmax) + 1);
    for (int j = 0; j <= jmax; ++j)
        s[j] = eval_kernel(spec, static_cast<double>(stride * j) * mesh);
    return s;
}

std::vector<double> weighted(const std::vector<double>& samples,
                             const WeightTable& table) {
    std::vector<double> w(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
        w[j] = table.values[j] * samples[j];
    return w;
}

// value at an arbitrary lattice position q (|spill| < N), boundary-resolved
double resolve_any(std::span<const double> v, long q, BoundaryMode mode) {
    const long n = static_cast<long>(v.size());
    if (q >= 0 && q < n) return v[q];
    switch (mode) {
        case BoundaryMode::periodic: return q < 0 ? v[q + n] : v[q - n];
        case BoundaryMode::dirichlet: return 0.0;
        case BoundaryMode::asymptotic: return q < 0 ? v[0] : v[n - 1];
        case BoundaryMode::left_asymptotic_right_dirichlet:
            return q < 0 ? v[0] : 0.0;
        case BoundaryMode::left_dirichlet_right_asymptotic:
            return q < 0 ? 0.0 : v[n - 1];
    }
    return 0.0;
}

// out[pad + q] = boundary-resolved value at q for q in [-pad, n + pad)
void fill_padded(std::span<const double> v, int pad, BoundaryMode mode,
                 std::vector<double>& out) {
    const int n = static_cast<int>(v.size());
    out.resize(static_cast<std::size_t>(n) + 2 * pad);
    std::copy(v.begin(), v.end(), out.begin() + pad);
    for (int q = -pad; q < 0; ++q) out[pad + q] = resolve_any(v, q, mode);
    for (int q = n; q < n + pad; ++q) out[pad + q] = resolve_any(v, q, mode);
}

constexpr int kBlock = 2048;

// Repulsion factors over the extended index range [-ext, N + ext), with the
// same boundary resolution applied inside the exponent sums at virtual
// indices. out[ext + q] = lambda_q.
void lambda_extended(const DensityField& field, const SampledKernels& ws,
                     BoundaryMode mode, int ext, std::vector<double>& out) {
    const int n = field.grid.count;
    const double h = field.grid.mesh;
    out.assign(static_cast<std::size_t>(n) + 2 * ext, 1.0);
    if (!ws.repulsion_on) return;

    const int jphi = ws.repulsion_range();
    const double* wr = ws.weighted_repulsion.data();

    // Periodic factors wrap; computing the interior once and copying keeps
    // the extension bitwise identical to the wrapped values.
    const int core_ext = mode == BoundaryMode::periodic ? 0 : ext;

    std::vector<double> deep;
    fill_padded(field.values, core_ext + jphi, mode, deep);

    const int total = n + 2 * core_ext;
    const int nblocks = (total + kBlock - 1) / kBlock;

#pragma omp parallel for schedule(static)
    for (int blk = 0; blk < nblocks; ++blk) {
        const int b0 = blk * kBlock;
        const int b1 = std::min(total, b0 + kBlock);
        const int m = b1 - b0;
        // deep[(core_ext + jphi) + (q)] holds n_q; block covers
        // q = b0 - core_ext .. b1 - core_ext
        const double* nb = deep.data() + jphi + b0;
        std::vector<double> e(m);
        const double w0 = wr[0];
        for (int i = 0; i < m; ++i) e[i] = w0 * nb[i];
        for (int j = 1; j <= jphi; ++j) {
            const double w = wr[j];
            const double* nl = nb - j;
            const double* nr = nb + j;
            for (int i = 0; i < m; ++i) e[i] += w * (nl[i] + nr[i]);
        }
        double* lam = out.data() + (ext - core_ext) + b0;
        for (int i = 0; i < m; ++i) lam[i] = std::exp(-h * e[i]);
    }

    if (mode == BoundaryMode::periodic && ext > 0) {
        for (int q = -ext; q < 0; ++q) out[ext + q] = out[ext + q + n];
        for (int q = n; q < n + ext; ++q) out[ext + q] = out[ext + q - n];
    }
}

void require_same_grid(const DensityField& field, const SampledKernels& ws) {
    if (!(field.grid == ws.grid))
        throw std::invalid_argument(
            "field and kernel workspace use different grids");
}

SampledKernels assemble(const KernelSpec& jump, const KernelSpec& coalescence,
                        const KernelSpec& repulsion, const Grid& grid,
                        int ja, int jb, int jphi, QuadratureRule rule,
                        std::vector<std::string>* warnings) {
    SampledKernels ws;
    ws.grid = grid;
    ws.jump_on = jump.enabled();
    ws.coalescence_on = coalescence.enabled();
    ws.repulsion_on = repulsion.enabled();
    const double h = grid.mesh;

    if (ws.jump_on) {
        ws.jump_table = quadrature_weights(rule, ja, warnings);
        ws.jump_samples = sample_offsets(jump, h, ja, 1);
        ws.weighted_jump = weighted(ws.jump_samples, ws.jump_table);
    }
    if (ws.coalescence_on) {
        ws.loss_table = quadrature_weights(rule, jb, warnings);
        ws.loss_samples = sample_offsets(coalescence, h, jb, 1);
        ws.weighted_loss = weighted(ws.loss_samples, ws.loss_table);
        const int jg = jb / 2;
        ws.gain_table = quadrature_weights(rule, jg, warnings);
        ws.gain_samples = sample_offsets(coalescence, h, jg, 2);
        ws.weighted_gain = weighted(ws.gain_samples, ws.gain_table);
    }
    if (ws.repulsion_on) {
        ws.repulsion_table = quadrature_weights(rule, jphi, warnings);
        ws.repulsion_samples = sample_offsets(repulsion, h, jphi, 1);
        ws.weighted_repulsion = weighted(ws.repulsion_samples,
                                         ws.repulsion_table);
    }
    return ws;
}

} // namespace

SampledKernels build_workspace(const KernelSpec& jump,
                               const KernelSpec& coalescence,
                               const KernelSpec& repulsion, const Grid& grid,
                               QuadratureRule rule,
                               std::vector<std::string>* warnings) {
    validate_kernel(jump, "jump kernel");
    validate_kernel(coalescence, "coalescence kernel");
    validate_kernel(repulsion, "repulsion kernel");

    const double h = grid.mesh;
    const double half_length = grid.length() / 2.0;
    const int cap = grid.count / 2 - 1;

    std::vector<std::string> issues;
    auto range_of = [&](const KernelSpec& spec, const char* role) {
        if (!spec.enabled()) return 0;
        const double radius = truncation_radius(spec);
        if (radius >= half_length) {
            issues.push_back(std::string(role) + ": truncation radius " +
                             std::to_string(radius) +
                             " must stay below L/2 = " +
                             std::to_string(half_length) +
                             "; enlarge the domain");
            return 0;
        }
        return std::min(cap, truncation_index(radius, h));
    };

    const int ja = range_of(jump, "jump kernel");
    const int jb = range_of(coalescence, "coalescence kernel");
    const int jphi = range_of(repulsion, "repulsion kernel");
    if (coalescence.enabled() && issues.empty() && jb < 2)
        issues.push_back(
            "coalescence kernel: mesh too coarse to resolve the kernel "
            "(needs at least two sample offsets inside the radius)");
    if (!issues.empty())
        throw ConfigError("kernel workspace configuration", issues);

    return assemble(jump, coalescence, repulsion, grid, ja, jb, jphi, rule,
                    warnings);
}

SampledKernels build_workspace_fixed_range(const KernelSpec& jump,
                                           const KernelSpec& coalescence,
                                           const KernelSpec& repulsion,
                                           const Grid& grid, int half_range,
                                           QuadratureRule rule) {
    validate_kernel(jump, "jump kernel");
    validate_kernel(coalescence, "coalescence kernel");
    validate_kernel(repulsion, "repulsion kernel");
    if (half_range < 1 || half_range > grid.count / 2 - 1)
        throw ConfigError("fixed half-range must lie in [1, N/2 - 1]");
    if (coalescence.enabled() && half_range < 2)
        throw ConfigError("coalescence needs a half-range of at least 2");
    return assemble(jump, coalescence, repulsion, grid, half_range,
                    half_range, half_range, rule, nullptr);
}

std::vector<double> compute_lambda(const DensityField& field,
                                   const SampledKernels& ws,
                                   BoundaryMode mode) {
    require_same_grid(field, ws);
    std::vector<double> lam;
    lambda_extended(field, ws, mode, 0, lam);
    return lam;
}

RateField compute_rhs(const DensityField& field, const SampledKernels& ws,
                      BoundaryMode mode) {
    require_same_grid(field, ws);
    const int n = field.grid.count;
    const double h = field.grid.mesh;
    RateField rate{field.grid, std::vector<double>(n, 0.0)};
    if (!ws.jump_on && !ws.coalescence_on) return rate;

    const int ja = ws.jump_range();
    const int jb = ws.loss_range();
    const int jg = ws.gain_range();
    const int pad = std::max({ja, jb, jg});

    std::vector<double> np;
    fill_padded(field.values, pad, mode, np);

    std::vector<double> lam;
    if (ws.jump_on) lambda_extended(field, ws, mode, ja, lam);

    const double* wj = ws.weighted_jump.data();
    const double* wl = ws.weighted_loss.data();
    const double* wg = ws.weighted_gain.data();
    const double loss0 = ws.coalescence_on ? ws.weighted_loss[0] : 0.0;
    const double gain0 = ws.coalescence_on ? ws.weighted_gain[0] : 0.0;

    const int nblocks = (n + kBlock - 1) / kBlock;

#pragma omp parallel for schedule(static)
    for (int blk = 0; blk < nblocks; ++blk) {
        const int b0 = blk * kBlock;
        const int b1 = std::min(n, b0 + kBlock);
        const int m = b1 - b0;
        const double* nb = np.data() + pad + b0;
        const double* lb = ws.jump_on ? lam.data() + ja + b0 : nullptr;

        std::vector<double> acc_jump(ws.jump_on ? m : 0, 0.0);
        std::vector<double> acc_loss(ws.coalescence_on ? m : 0, 0.0);
        std::vector<double> acc_gain(ws.coalescence_on ? m : 0, 0.0);

        if (ws.jump_on) {
            double* aj = acc_jump.data();
            for (int j = 1; j <= ja; ++j) {
                const double w = wj[j];
                const double* nl = nb - j;
                const double* nr = nb + j;
                const double* ll = lb - j;
                const double* lr = lb + j;
                for (int i = 0; i < m; ++i)
                    aj[i] += w * (lb[i] * (nl[i] + nr[i]) -
                                  nb[i] * (ll[i] + lr[i]));
            }
        }
        if (ws.coalescence_on) {
            double* al = acc_loss.data();
            for (int j = 1; j <= jb; ++j) {
                const double w = wl[j];
                const double* nl = nb - j;
                const double* nr = nb + j;
                for (int i = 0; i < m; ++i) al[i] += w * (nl[i] + nr[i]);
            }
            double* ag = acc_gain.data();
            for (int j = 1; j <= jg; ++j) {
                const double w = wg[j];
                const double* nl = nb - j;
                const double* nr = nb + j;
                for (int i = 0; i < m; ++i) ag[i] += w * (nl[i] * nr[i]);
            }
        }

        double* out = rate.values.data() + b0;
        for (int i = 0; i < m; ++i) {
            const double ni = nb[i];
            double s = 0.0;
            if (ws.jump_on) s += acc_jump[i];
            if (ws.coalescence_on) {
                // the two b_0 terms carry different endpoint weights when the
                // loss and gain half-ranges differ in parity; keep them
                // separate
                s += -2.0 * loss0 * ni * ni - 2.0 * ni * acc_loss[i] +
                     2.0 * gain0 * ni * ni + 4.0 * acc_gain[i];
            }
            out[i] = h * s;
        }
    }
    return rate;
}

RateField compute_rhs_naive(const DensityField& field, const KernelSpec& jump,
                            const KernelSpec& coalescence,
                            const KernelSpec& repulsion, BoundaryMode mode) {
    validate_kernel(jump, "jump kernel");
    validate_kernel(coalescence, "coalescence kernel");
    validate_kernel(repulsion, "repulsion kernel");

    const int n = field.grid.count;
    const double h = field.grid.mesh;
    const int reach = n / 2 - 1;
    const std::span<const double> v(field.values);

    // kernel values at signed offsets, evaluated directly
    std::vector<double> a(2 * reach + 1), b(2 * reach + 1),
        b2(2 * reach + 1), phi(2 * reach + 1);
    for (int j = -reach; j <= reach; ++j) {
        const double x = static_cast<double>(j) * h;
        a[reach + j] = jump.enabled() ? eval_kernel(jump, x) : 0.0;
        b[reach + j] = coalescence.enabled() ? eval_kernel(coalescence, x)
                                             : 0.0;
        b2[reach + j] =
            coalescence.enabled() ? eval_kernel(coalescence, 2.0 * x) : 0.0;
        phi[reach + j] = repulsion.enabled() ? eval_kernel(repulsion, x) : 0.0;
    }

    // lambda over the extended range [-reach, n + reach)
    std::vector<double> lam(static_cast<std::size_t>(n) + 2 * reach, 1.0);
    if (repulsion.enabled()) {
        for (long q = -reach; q < n + reach; ++q) {
            double e = 0.0;
            for (int k = -reach; k <= reach; ++k)
                e += phi[reach + k] * resolve_any(v, q - k, mode);
            lam[reach + q] = std::exp(-h * e);
        }
    }

    RateField rate{field.grid, std::vector<double>(n, 0.0)};
    for (int i = 0; i < n; ++i) {
        const double ni = v[i];
        const double li = lam[reach + i];
        double s = 0.0;
        for (int j = -reach; j <= reach; ++j) {
            const double nm = resolve_any(v, static_cast<long>(i) - j, mode);
            const double np_ = resolve_any(v, static_cast<long>(i) + j, mode);
            const double lm = lam[reach + i - j];
            s += a[reach + j] * (li * nm - lm * ni) -
                 2.0 * b[reach + j] * ni * nm + 2.0 * b2[reach + j] * nm * np_;
        }
        rate.values[i] = h * s;
    }
    return rate;
}

} // namespace jumpcoal
