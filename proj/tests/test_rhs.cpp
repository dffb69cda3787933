#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "jumpcoal/diagnostics.hpp"
#include "jumpcoal/errors.hpp"
#include "jumpcoal/rhs.hpp"

using namespace jumpcoal;

namespace {

const KernelSpec kOff{KernelShape::gaussian, 0.0, 1.0, 0.0};

DensityField random_field(const Grid& grid, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(0.0, 2.0);
    DensityField f = make_field(grid);
    for (double& v : f.values) v = dist(rng);
    return f;
}

DensityField reversed(const DensityField& f) {
    DensityField out = f;
    std::reverse(out.values.begin(), out.values.end());
    return out;
}

double max_abs_diff(const std::vector<double>& a,
                    const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("workspace sampling") {
    Grid grid = build_grid(20.0, 200); // h = 0.1

    SUBCASE("gaussian jump kernel") {
        KernelSpec a{KernelShape::gaussian, 2.0, 1.0, 0.0};
        SampledKernels ws = build_workspace(a, kOff, kOff, grid,
                                            QuadratureRule::simpson);
        CHECK(ws.jump_range() == 60); // ceil(6 sigma / h)
        CHECK(ws.jump_samples[0] ==
              doctest::Approx(2.0 * 0.3989422804014327).epsilon(1e-9));
        CHECK(ws.loss_samples.empty());
        CHECK(ws.repulsion_samples.empty());
    }

    SUBCASE("shifted rectangle coalescence kernel") {
        KernelSpec b{KernelShape::rectangle, 1.0, 1.0, 8.0};
        SampledKernels ws = build_workspace(kOff, b, kOff, grid,
                                            QuadratureRule::simpson);
        CHECK(ws.loss_range() == 90); // ceil((sigma + shift) / h)
        CHECK(ws.gain_range() == 45);
        for (int j = 0; j <= 90; ++j) {
            const double x = j * 0.1;
            if (x < 7.0 - 1e-12)
                CHECK(ws.loss_samples[j] == 0.0);
            else if (x > 7.0 + 1e-12 && x < 9.0 - 1e-12)
                CHECK(ws.loss_samples[j] ==
                      doctest::Approx(0.25)); // half of mu/(2 sigma)
        }
        // gain samples live at offsets 2jh
        CHECK(ws.gain_samples[40] == doctest::Approx(0.25)); // b(8.0)
        CHECK(ws.gain_samples[10] == 0.0);                   // b(2.0)
    }

    SUBCASE("radius at or beyond L/2 is rejected") {
        KernelSpec wide{KernelShape::gaussian, 1.0, 2.0, 0.0}; // R = 12
        CHECK_THROWS_AS(
            build_workspace(wide, kOff, kOff, grid, QuadratureRule::simpson),
            ConfigError);
    }

    SUBCASE("coarse mesh cannot resolve coalescence") {
        Grid coarse = build_grid(20.0, 10); // h = 2
        KernelSpec b{KernelShape::rectangle, 1.0, 1.5, 0.0}; // R = 1.5, jb = 1
        CHECK_THROWS_AS(
            build_workspace(kOff, b, kOff, coarse, QuadratureRule::simpson),
            ConfigError);
    }
}

TEST_CASE("repulsion factors") {
    Grid grid = build_grid(20.0, 200);
    DensityField ones = make_field(grid, 1.0);

    SUBCASE("disabled potential gives lambda = 1") {
        SampledKernels ws = build_workspace(kOff, kOff, kOff, grid,
                                            QuadratureRule::simpson);
        const auto lam = compute_lambda(ones, ws, BoundaryMode::periodic);
        for (double l : lam) CHECK(l == 1.0);
    }

    SUBCASE("constant field matches the exact integral") {
        // exponent tends to -mu_phi * n for a flat field
        for (double mu : {20.0, 8.0}) {
            KernelSpec phi{KernelShape::gaussian, mu, 1.0, 0.0};
            SampledKernels ws = build_workspace(kOff, kOff, phi, grid,
                                                QuadratureRule::simpson);
            const auto lam = compute_lambda(ones, ws, BoundaryMode::periodic);
            for (double l : lam)
                CHECK(l == doctest::Approx(std::exp(-mu)).epsilon(1e-6));
        }
    }

    SUBCASE("lambda lies in (0, 1] for nonnegative fields") {
        std::mt19937 rng(11);
        KernelSpec phi{KernelShape::gaussian, 5.0, 0.8, 0.0};
        SampledKernels ws = build_workspace(kOff, kOff, phi, grid,
                                            QuadratureRule::simpson);
        for (int trial = 0; trial < 5; ++trial) {
            DensityField f = random_field(grid, rng);
            for (BoundaryMode mode :
                 {BoundaryMode::periodic, BoundaryMode::dirichlet,
                  BoundaryMode::asymptotic}) {
                const auto lam = compute_lambda(f, ws, mode);
                for (double l : lam) {
                    CHECK(l > 0.0);
                    CHECK(l <= 1.0);
                }
            }
        }
    }
}

TEST_CASE("rate field basics") {
    Grid grid = build_grid(20.0, 200);
    KernelSpec a{KernelShape::gaussian, 1.0, 1.0, 0.0};
    KernelSpec b{KernelShape::gaussian, 1.0, 1.0, 0.0};
    KernelSpec phi{KernelShape::gaussian, 20.0, 1.0, 0.0};

    SUBCASE("zero field gives a zero rate") {
        SampledKernels ws = build_workspace(a, b, phi, grid,
                                            QuadratureRule::simpson);
        DensityField zero = make_field(grid, 0.0);
        RateField r = compute_rhs(zero, ws, BoundaryMode::periodic);
        for (double v : r.values) CHECK(v == 0.0);
    }

    SUBCASE("flat field, jumps only: gains and losses cancel") {
        SampledKernels ws = build_workspace(a, kOff, phi, grid,
                                            QuadratureRule::simpson);
        DensityField ones = make_field(grid, 1.0);
        RateField r = compute_rhs(ones, ws, BoundaryMode::periodic);
        for (double v : r.values) CHECK(std::abs(v) <= 1e-13);
    }

    SUBCASE("flat field, coalescence only: rate is -mu_b n^2") {
        SampledKernels ws = build_workspace(kOff, b, kOff, grid,
                                            QuadratureRule::simpson);
        DensityField ones = make_field(grid, 1.0);
        RateField r = compute_rhs(ones, ws, BoundaryMode::periodic);
        for (double v : r.values)
            CHECK(v == doctest::Approx(-1.0).epsilon(1e-6));
    }
}

TEST_CASE("reference-evaluator equivalence") {
    std::mt19937 rng(2024);

    const BoundaryMode modes[] = {
        BoundaryMode::periodic, BoundaryMode::dirichlet,
        BoundaryMode::asymptotic,
        BoundaryMode::left_asymptotic_right_dirichlet,
        BoundaryMode::left_dirichlet_right_asymptotic};

    SUBCASE("rectangle kernels, N = 16") {
        Grid grid = build_grid(16.0, 16); // h = 1, half-range 7
        KernelSpec a{KernelShape::rectangle, 0.8, 2.5, 0.0};
        KernelSpec b{KernelShape::rectangle, 0.6, 1.5, 3.0};
        KernelSpec phi{KernelShape::rectangle, 2.0, 3.5, 0.0};
        SampledKernels ws = build_workspace_fixed_range(
            a, b, phi, grid, 7, QuadratureRule::unit);

        for (int trial = 0; trial < 20; ++trial) {
            DensityField f = random_field(grid, rng);
            for (BoundaryMode mode : modes) {
                RateField fast = compute_rhs(f, ws, mode);
                RateField ref = compute_rhs_naive(f, a, b, phi, mode);
                CHECK(max_abs_diff(fast.values, ref.values) <= 1e-12);
            }
        }
    }

    SUBCASE("gaussian kernels, N = 32") {
        Grid grid = build_grid(16.0, 32); // h = 0.5, half-range 15
        KernelSpec a{KernelShape::gaussian, 1.2, 0.8, 0.0};
        KernelSpec b{KernelShape::gaussian, 0.7, 0.6, 0.0};
        KernelSpec phi{KernelShape::gaussian, 1.5, 0.9, 0.0};
        SampledKernels ws = build_workspace_fixed_range(
            a, b, phi, grid, 15, QuadratureRule::unit);

        for (int trial = 0; trial < 10; ++trial) {
            DensityField f = random_field(grid, rng);
            for (BoundaryMode mode : modes) {
                RateField fast = compute_rhs(f, ws, mode);
                RateField ref = compute_rhs_naive(f, a, b, phi, mode);
                CHECK(max_abs_diff(fast.values, ref.values) <= 1e-12);
            }
        }
    }

    SUBCASE("everything disabled gives zero") {
        Grid grid = build_grid(16.0, 16);
        DensityField f = random_field(grid, rng);
        RateField ref =
            compute_rhs_naive(f, kOff, kOff, kOff, BoundaryMode::periodic);
        for (double v : ref.values) CHECK(v == 0.0);
    }
}

TEST_CASE("conservation and sign properties") {
    Grid grid = build_grid(20.0, 128);
    std::mt19937 rng(5);

    SUBCASE("jumps conserve the discrete mass under periodic boundaries") {
        KernelSpec a{KernelShape::gaussian, 1.0, 1.0, 0.0};
        KernelSpec phi{KernelShape::gaussian, 8.0, 1.0, 0.0};
        SampledKernels ws = build_workspace(a, kOff, phi, grid,
                                            QuadratureRule::simpson);
        for (int trial = 0; trial < 10; ++trial) {
            DensityField f = random_field(grid, rng);
            RateField r = compute_rhs(f, ws, BoundaryMode::periodic);
            double sum = 0.0;
            for (double v : r.values) sum += v;
            CHECK(std::abs(sum) <= 1e-12);
        }
    }

    SUBCASE("coalescence only destroys mass") {
        KernelSpec b{KernelShape::gaussian, 1.0, 1.0, 0.0};
        SampledKernels ws = build_workspace(kOff, b, kOff, grid,
                                            QuadratureRule::simpson);
        for (int trial = 0; trial < 10; ++trial) {
            DensityField f = random_field(grid, rng);
            RateField r = compute_rhs(f, ws, BoundaryMode::periodic);
            double sum = 0.0;
            for (double v : r.values) sum += v;
            CHECK(sum <= 1e-12);
        }
    }
}

TEST_CASE("symmetry and mirror equivariance") {
    Grid grid = build_grid(20.0, 128);
    std::mt19937 rng(17);
    KernelSpec a{KernelShape::gaussian, 1.0, 1.0, 2.0};
    KernelSpec b{KernelShape::gaussian, 0.5, 1.0, 0.0};
    KernelSpec phi{KernelShape::gaussian, 8.0, 1.0, 0.0};
    SampledKernels ws =
        build_workspace(a, b, phi, grid, QuadratureRule::simpson);

    SUBCASE("even fields keep even rates") {
        DensityField f = make_field(grid);
        std::uniform_real_distribution<double> dist(0.0, 2.0);
        for (int i = 0; i < grid.count / 2; ++i) {
            const double v = dist(rng);
            f.values[i] = v;
            f.values[grid.count - 1 - i] = v;
        }
        for (BoundaryMode mode :
             {BoundaryMode::periodic, BoundaryMode::dirichlet}) {
            RateField r = compute_rhs(f, ws, mode);
            CHECK(symmetry_defect({grid, r.values}) == 0.0);
        }
    }

    SUBCASE("index reversal maps rates to reversed rates") {
        for (int trial = 0; trial < 5; ++trial) {
            DensityField f = random_field(grid, rng);
            DensityField fr = reversed(f);
            // self-mirrored modes
            for (BoundaryMode mode :
                 {BoundaryMode::periodic, BoundaryMode::dirichlet,
                  BoundaryMode::asymptotic}) {
                RateField r = compute_rhs(f, ws, mode);
                RateField rr = compute_rhs(fr, ws, mode);
                CHECK(max_abs_diff(rr.values,
                                   reversed({grid, r.values}).values) == 0.0);
            }
            // the combined pair mirrors onto each other
            RateField r = compute_rhs(
                f, ws, BoundaryMode::left_asymptotic_right_dirichlet);
            RateField rr = compute_rhs(
                fr, ws, BoundaryMode::left_dirichlet_right_asymptotic);
            CHECK(max_abs_diff(rr.values,
                               reversed({grid, r.values}).values) == 0.0);
        }
    }
}
