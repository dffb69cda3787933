#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jumpcoal/diagnostics.hpp"
#include "jumpcoal/rhs.hpp"
#include "jumpcoal/spectral.hpp"

using namespace jumpcoal;

namespace {

const KernelSpec kOff{KernelShape::gaussian, 0.0, 1.0, 0.0};

double max_abs_diff(const std::vector<double>& a,
                    const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("discrete transforms") {
    SUBCASE("constant sequence concentrates in bin zero") {
        std::vector<double> f(16, 2.5);
        auto F = dft_forward(f);
        CHECK(F[0].real() == doctest::Approx(40.0).epsilon(1e-14));
        CHECK(F[0].imag() == doctest::Approx(0.0));
        for (int k = 1; k < 16; ++k) CHECK(std::abs(F[k]) <= 1e-12);
    }

    SUBCASE("single cosine hits exactly two bins") {
        const int n = 64, k0 = 5;
        std::vector<double> f(n);
        for (int i = 0; i < n; ++i)
            f[i] = std::cos(2.0 * std::numbers::pi * k0 * i / n);
        auto F = dft_forward(f);
        CHECK(std::abs(F[k0]) == doctest::Approx(n / 2.0).epsilon(1e-12));
        CHECK(std::abs(F[n - k0]) == doctest::Approx(n / 2.0).epsilon(1e-12));
        for (int k = 0; k < n; ++k)
            if (k != k0 && k != n - k0) CHECK(std::abs(F[k]) <= 1e-10);
    }

    SUBCASE("round trip restores the sequence") {
        std::mt19937 rng(9);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<double> f(128);
        for (double& v : f) v = dist(rng);
        auto back = dft_inverse(dft_forward(f));
        CHECK(max_abs_diff(f, back) <= 1e-12);
    }
}

TEST_CASE("spectral workspace construction") {
    Grid grid = build_grid(20.0, 256);

    SUBCASE("disabled kernel transforms to zero") {
        SpectralWorkspace ws = SpectralWorkspace::build(kOff, kOff, grid);
        for (const auto& c : ws.jump_spectrum()) CHECK(std::abs(c) == 0.0);
    }

    SUBCASE("zero mode approximates kernel mass over mesh") {
        KernelSpec a{KernelShape::gaussian, 1.0, 1.0, 0.0};
        SpectralWorkspace ws = SpectralWorkspace::build(a, kOff, grid);
        CHECK(ws.jump_spectrum()[0].real() * grid.mesh ==
              doctest::Approx(1.0).epsilon(1e-6));
    }

    SUBCASE("even kernels have real spectra") {
        KernelSpec a{KernelShape::gaussian, 2.0, 0.7, 3.0};
        SpectralWorkspace ws = SpectralWorkspace::build(a, kOff, grid);
        for (const auto& c : ws.jump_spectrum())
            CHECK(std::abs(c.imag()) <= 1e-12);
    }
}

TEST_CASE("wraparound ordering puts convolution peaks where they belong") {
    // narrow bump at x0 convolved with a +-5 shifted pair must peak at
    // x0 -+ 5; a half-domain or half-mesh ordering slip moves the peaks
    Grid grid = build_grid(40.0, 512);
    KernelSpec pair{KernelShape::gaussian, 1.0, 0.5, 5.0};
    SpectralWorkspace ws = SpectralWorkspace::build(pair, kOff, grid);

    const double x0 = 3.0;
    DensityField bump = make_field(grid);
    for (int i = 0; i < grid.count; ++i) {
        const double d = grid.knot(i) - x0;
        bump.values[i] = std::exp(-d * d / 0.02);
    }
    RateField r = ws.evaluate(bump);

    // gain part dominates away from the bump: the largest rate on each side
    // marks where mass arrives
    auto argmax_where = [&](auto&& keep) {
        int best = -1;
        for (int i = 0; i < grid.count; ++i)
            if (keep(grid.knot(i)) &&
                (best < 0 || r.values[i] > r.values[best]))
                best = i;
        return best;
    };
    const int left_peak =
        argmax_where([&](double x) { return x < x0 - 1.0; });
    const int right_peak =
        argmax_where([&](double x) { return x > x0 + 1.0; });
    CHECK(grid.knot(left_peak) == doctest::Approx(x0 - 5.0).epsilon(0.02));
    CHECK(grid.knot(right_peak) == doctest::Approx(x0 + 5.0).epsilon(0.02));
}

TEST_CASE("spectral evaluation basics") {
    Grid grid = build_grid(20.0, 400);
    KernelSpec a{KernelShape::gaussian, 1.0, 1.0, 0.0};
    KernelSpec phi{KernelShape::gaussian, 8.0, 1.0, 0.0};

    SUBCASE("zero field gives zero rates") {
        SpectralWorkspace ws = SpectralWorkspace::build(a, phi, grid);
        RateField r = ws.evaluate(make_field(grid, 0.0));
        for (double v : r.values) CHECK(std::abs(v) <= 1e-15);
    }

    SUBCASE("flat field gives zero rates") {
        SpectralWorkspace ws = SpectralWorkspace::build(a, phi, grid);
        RateField r = ws.evaluate(make_field(grid, 1.0));
        for (double v : r.values) CHECK(std::abs(v) <= 1e-10);
    }

    SUBCASE("mass is conserved") {
        SpectralWorkspace ws = SpectralWorkspace::build(a, phi, grid);
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> dist(0.2, 1.8);
        DensityField f = make_field(grid);
        // smooth random periodic field from a few low harmonics
        std::vector<double> amp(6), phase(6);
        for (int k = 0; k < 6; ++k) {
            amp[k] = 0.1 * dist(rng);
            phase[k] = dist(rng);
        }
        for (int i = 0; i < grid.count; ++i) {
            double v = 1.0;
            for (int k = 0; k < 6; ++k)
                v += amp[k] * std::cos(2.0 * std::numbers::pi * (k + 1) *
                                           grid.knot(i) / grid.length() +
                                       phase[k]);
            f.values[i] = v;
        }
        RateField r = ws.evaluate(f);
        double sum = 0.0;
        for (double v : r.values) sum += v;
        double scale = 0.0;
        for (double v : r.values) scale += std::abs(v);
        CHECK(std::abs(sum) <= 1e-10 * std::max(1.0, scale));
    }
}

TEST_CASE("spectral path matches the direct path on smooth fields") {
    Grid grid = build_grid(20.0, 800);
    KernelSpec a{KernelShape::gaussian, 1.0, 1.0, 0.0};
    KernelSpec phi{KernelShape::gaussian, 8.0, 1.0, 0.0};

    TrigonometricProfile trig{1.0, 1.0, 3};
    DensityField f = sample_initial(InitialCondition{trig}, grid);

    SampledKernels direct_ws =
        build_workspace(a, kOff, phi, grid, QuadratureRule::simpson);
    SpectralWorkspace spectral_ws = SpectralWorkspace::build(a, phi, grid);

    RateField direct = compute_rhs(f, direct_ws, BoundaryMode::periodic);
    RateField spectral = spectral_ws.evaluate(f);

    double direct_peak = 0.0;
    for (double v : direct.values)
        direct_peak = std::max(direct_peak, std::abs(v));
    CHECK(max_abs_diff(direct.values, spectral.values) <=
          1e-6 * direct_peak + 1e-10);
}
