#include "jumpcoal/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

#include "jumpcoal/errors.hpp"

namespace jumpcoal {

namespace {

fftw_complex* as_fftw(std::complex<double>* p) {
    return reinterpret_cast<fftw_complex*>(p);
}

// kernel value at wraparound lattice offset: bins 0..N/2 hold offsets
// 0, h, .., L/2; bins above N/2 hold the negative offsets
double offset_sample(const KernelSpec& spec, const Grid& grid, int bin) {
    const int n = grid.count;
    const long long j = bin <= n / 2 ? bin : bin - n;
    return eval_kernel(spec, static_cast<double>(j) * grid.mesh);
}

} // namespace

std::vector<std::complex<double>> dft_forward(std::span<const double> f) {
    const int n = static_cast<int>(f.size());
    std::vector<std::complex<double>> in(n), out(n);
    for (int i = 0; i < n; ++i) in[i] = f[i];
    fftw_plan plan = fftw_plan_dft_1d(n, as_fftw(in.data()),
                                      as_fftw(out.data()), FFTW_FORWARD,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    return out;
}

std::vector<double> dft_inverse(std::span<const std::complex<double>> F) {
    const int n = static_cast<int>(F.size());
    std::vector<std::complex<double>> in(F.begin(), F.end()), out(n);
    fftw_plan plan = fftw_plan_dft_1d(n, as_fftw(in.data()),
                                      as_fftw(out.data()), FFTW_BACKWARD,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    std::vector<double> result(n);
    const double scale = 1.0 / n;
    for (int i = 0; i < n; ++i) result[i] = out[i].real() * scale;
    return result;
}

struct SpectralWorkspace::Impl {
    Grid grid;
    KernelSpec jump, repulsion;
    std::vector<std::complex<double>> jump_hat, repulsion_hat;
    std::vector<std::complex<double>> buf_in, buf_out;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    ~Impl() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }

    void make_plans() {
        const int n = grid.count;
        buf_in.assign(n, {});
        buf_out.assign(n, {});
        fwd = fftw_plan_dft_1d(n, as_fftw(buf_in.data()),
                               as_fftw(buf_out.data()), FFTW_FORWARD,
                               FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, as_fftw(buf_in.data()),
                               as_fftw(buf_out.data()), FFTW_BACKWARD,
                               FFTW_ESTIMATE);
    }

    // forward transform of a real sequence into dst
    void forward(std::span<const double> f,
                 std::vector<std::complex<double>>& dst) {
        const int n = grid.count;
        for (int i = 0; i < n; ++i) buf_in[i] = f[i];
        fftw_execute(fwd);
        dst.assign(buf_out.begin(), buf_out.end());
    }

    // real part of the inverse transform of spectrum * factor
    void inverse_product(const std::vector<std::complex<double>>& spectrum,
                         const std::vector<std::complex<double>>& factor,
                         std::vector<double>& dst) {
        const int n = grid.count;
        for (int i = 0; i < n; ++i) buf_in[i] = spectrum[i] * factor[i];
        fftw_execute(bwd);
        dst.resize(n);
        const double scale = 1.0 / n;
        for (int i = 0; i < n; ++i) dst[i] = buf_out[i].real() * scale;
    }
};

SpectralWorkspace::SpectralWorkspace(std::unique_ptr<Impl> impl)
    : impl_(std::move(impl)) {}
SpectralWorkspace::SpectralWorkspace(SpectralWorkspace&&) noexcept = default;
SpectralWorkspace& SpectralWorkspace::operator=(SpectralWorkspace&&) noexcept =
    default;
SpectralWorkspace::~SpectralWorkspace() = default;

SpectralWorkspace SpectralWorkspace::build(const KernelSpec& jump,
                                           const KernelSpec& repulsion,
                                           const Grid& grid) {
    validate_kernel(jump, "jump kernel");
    validate_kernel(repulsion, "repulsion kernel");

    auto impl = std::make_unique<Impl>();
    impl->grid = grid;
    impl->jump = jump;
    impl->repulsion = repulsion;
    impl->make_plans();

    const int n = grid.count;
    std::vector<double> samples(n);
    auto transform_kernel = [&](const KernelSpec& spec,
                                std::vector<std::complex<double>>& hat) {
        if (!spec.enabled()) {
            hat.assign(n, {});
            return;
        }
        for (int bin = 0; bin < n; ++bin)
            samples[bin] = offset_sample(spec, grid, bin);
        impl->forward(samples, hat);
    };
    transform_kernel(jump, impl->jump_hat);
    transform_kernel(repulsion, impl->repulsion_hat);

    return SpectralWorkspace(std::move(impl));
}

const Grid& SpectralWorkspace::grid() const { return impl_->grid; }

std::span<const std::complex<double>> SpectralWorkspace::jump_spectrum()
    const {
    return impl_->jump_hat;
}

std::span<const std::complex<double>> SpectralWorkspace::repulsion_spectrum()
    const {
    return impl_->repulsion_hat;
}

SpectralWorkspace SpectralWorkspace::clone() const {
    return build(impl_->jump, impl_->repulsion, impl_->grid);
}

RateField SpectralWorkspace::evaluate(const DensityField& field) {
    Impl& im = *impl_;
    if (!(field.grid == im.grid))
        throw std::invalid_argument(
            "field and spectral workspace use different grids");

    const int n = im.grid.count;
    const double h = im.grid.mesh;
    RateField rate{field.grid, std::vector<double>(n, 0.0)};

    std::vector<std::complex<double>> n_hat;
    im.forward(field.values, n_hat);

    // crowding factor g = exp(-h (phi * n))
    std::vector<double> g(n, 1.0);
    if (im.repulsion.enabled()) {
        std::vector<double> conv_phi_n;
        im.inverse_product(im.repulsion_hat, n_hat, conv_phi_n);
        for (int i = 0; i < n; ++i) g[i] = std::exp(-h * conv_phi_n[i]);
    }

    if (!im.jump.enabled()) return rate;

    std::vector<std::complex<double>> g_hat;
    im.forward(g, g_hat);

    std::vector<double> conv_a_g, conv_a_n;
    im.inverse_product(im.jump_hat, g_hat, conv_a_g);
    im.inverse_product(im.jump_hat, n_hat, conv_a_n);

    for (int i = 0; i < n; ++i)
        rate.values[i] =
            h * (-field.values[i] * conv_a_g[i] + g[i] * conv_a_n[i]);
    return rate;
}

RateField compute_rhs_spectral(const DensityField& field,
                               SpectralWorkspace& ws) {
    return ws.evaluate(field);
}

} // namespace jumpcoal
