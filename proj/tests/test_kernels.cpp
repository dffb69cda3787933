#include <doctest.h>

#include <cmath>
#include <random>

#include "jumpcoal/errors.hpp"
#include "jumpcoal/kernels.hpp"

using namespace jumpcoal;

namespace {

// midpoint-rule mass of the kernel over [-R, R]; independent of the solver's
// weighted sums
double quadrature_mass(const KernelSpec& spec, double radius, int samples) {
    const double h = 2.0 * radius / samples;
    double sum = 0.0;
    for (int i = 0; i < samples; ++i)
        sum += eval_kernel(spec, -radius + (i + 0.5) * h);
    return h * sum;
}

} // namespace

TEST_CASE("kernel point evaluations") {
    KernelSpec gauss{KernelShape::gaussian, 1.0, 1.0, 0.0};
    CHECK(eval_kernel(gauss, 0.0) ==
          doctest::Approx(0.3989422804014327).epsilon(1e-12));

    KernelSpec rect{KernelShape::rectangle, 1.0, 1.0, 0.0};
    CHECK(eval_kernel(rect, 1.0) == 0.5); // inclusive edge
    CHECK(eval_kernel(rect, std::nextafter(1.0, 2.0)) == 0.0);
    CHECK(eval_kernel(rect, 0.3) == 0.5);

    KernelSpec pair{KernelShape::gaussian, 1.0, 1.0, 5.0};
    // (G(0) + G(10)) / 2
    CHECK(eval_kernel(pair, 5.0) ==
          doctest::Approx(0.1994711402007163).epsilon(1e-10));

    KernelSpec disabled{KernelShape::gaussian, 0.0, 1.0, 0.0};
    CHECK(eval_kernel(disabled, 0.0) == 0.0);
}

TEST_CASE("kernel evaluation rejects invalid parameters") {
    KernelSpec bad{KernelShape::gaussian, 1.0, -1.0, 0.0};
    CHECK_THROWS_AS(eval_kernel(bad, 0.0), ConfigError);
    KernelSpec bad_shift{KernelShape::rectangle, 1.0, 1.0, -2.0};
    CHECK_THROWS_AS(truncation_radius(bad_shift), ConfigError);
}

TEST_CASE("truncation radii") {
    CHECK(truncation_radius({KernelShape::gaussian, 1.0, 2.0, 0.0}) == 12.0);
    CHECK(truncation_radius({KernelShape::gaussian, 1.0, 1.0, 5.0}) == 11.0);
    CHECK(truncation_radius({KernelShape::rectangle, 1.0, 1.0, 8.0}) == 9.0);
    CHECK(truncation_radius({KernelShape::rectangle, 0.0, 1.0, 8.0}) == 0.0);
}

TEST_CASE("kernel mass equals mu") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> mu_dist(0.1, 5.0);
    std::uniform_real_distribution<double> sigma_dist(0.3, 2.5);
    std::uniform_real_distribution<double> shift_dist(0.0, 4.0);

    for (int trial = 0; trial < 12; ++trial) {
        KernelSpec spec;
        spec.shape = trial % 2 == 0 ? KernelShape::gaussian
                                    : KernelShape::rectangle;
        spec.mu = mu_dist(rng);
        spec.sigma = sigma_dist(rng);
        spec.shift = trial < 4 ? 0.0 : shift_dist(rng);

        const double r = truncation_radius(spec);
        const double mass = quadrature_mass(spec, r, 2'000'000);
        CHECK(mass == doctest::Approx(spec.mu).epsilon(1e-6));
    }
}

TEST_CASE("kernels are even bit for bit") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> x_dist(0.0, 15.0);
    const KernelSpec specs[] = {
        {KernelShape::gaussian, 2.0, 1.3, 0.0},
        {KernelShape::gaussian, 1.0, 0.7, 3.1},
        {KernelShape::rectangle, 0.5, 2.0, 0.0},
        {KernelShape::rectangle, 1.0, 1.0, 8.0},
    };
    for (const KernelSpec& spec : specs)
        for (int k = 0; k < 200; ++k) {
            const double x = x_dist(rng);
            CHECK(eval_kernel(spec, x) == eval_kernel(spec, -x));
        }
}

TEST_CASE("kernel tails beyond the truncation radius") {
    // rectangles vanish exactly; Gaussian tails sit at the 1e-8 level
    // relative to the peak (exp(-18) = 1.52e-8 right at the radius)
    KernelSpec rect{KernelShape::rectangle, 1.0, 1.5, 2.0};
    const double r_rect = truncation_radius(rect);
    for (double x : {r_rect + 1e-12, r_rect + 0.5, 2.0 * r_rect})
        CHECK(eval_kernel(rect, x) == 0.0);

    KernelSpec gauss{KernelShape::gaussian, 3.0, 1.2, 2.0};
    const double r = truncation_radius(gauss);
    // single-lobe peak amplitude mu / sqrt(2 pi sigma^2)
    const double peak =
        gauss.mu / std::sqrt(2.0 * 3.141592653589793 * gauss.sigma *
                             gauss.sigma);
    for (double x : {r, r + 0.1, 1.5 * r})
        CHECK(eval_kernel(gauss, x) <= 1.6e-8 * peak);
}

TEST_CASE("initial condition samples") {
    Grid grid = build_grid(20.0, 200);

    SUBCASE("trigonometric peak") {
        // cos(0) = 1 -> level (1 + modulation) at x = 0
        TrigonometricProfile t{1.0, 1.0, 3};
        CHECK(eval_initial(t, grid, 0.0) == doctest::Approx(2.0));
        DensityField f = sample_initial(InitialCondition{t}, grid);
        for (double v : f.values) CHECK(v >= 0.0);
    }

    SUBCASE("heaviside is inclusive at zero") {
        HeavisideProfile h{1.0, false};
        CHECK(eval_initial(h, grid, -1.0) == 1.0);
        CHECK(eval_initial(h, grid, 0.0) == 1.0);
        CHECK(eval_initial(h, grid, 1.0) == 0.0);

        HeavisideProfile m{1.0, true};
        CHECK(eval_initial(m, grid, -1.0) == 0.0);
        CHECK(eval_initial(m, grid, 1.0) == 1.0);
    }

    SUBCASE("multi-rectangle shifts") {
        // three cells on L = 20: shifts -20/3, 0, +20/3
        MultiRectangleProfile m{{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}};
        CHECK(eval_initial(m, grid, 20.0 / 3.0) == doctest::Approx(0.5));
        CHECK(eval_initial(m, grid, 0.0) == doctest::Approx(0.5));
        CHECK(eval_initial(m, grid, -20.0 / 3.0) == doctest::Approx(0.5));
        CHECK(eval_initial(m, grid, 3.0) == 0.0);
    }

    SUBCASE("rectangle as density") {
        RectangleProfile r{1.0, 1.0};
        CHECK(eval_initial(r, grid, 0.0) == 0.5);
        CHECK(eval_initial(r, grid, 1.0) == 0.5);
        CHECK(eval_initial(r, grid, 1.001) == 0.0);
    }

    SUBCASE("gaussian as density") {
        GaussianProfile g{1.0, 1.0};
        CHECK(eval_initial(g, grid, 0.0) ==
              doctest::Approx(0.3989422804014327));
    }
}

TEST_CASE("initial condition validation") {
    CHECK_THROWS_AS(validate_initial(TrigonometricProfile{1.0, 1.5, 3}),
                    ConfigError);
    CHECK_THROWS_AS(validate_initial(TrigonometricProfile{1.0, 0.5, 0}),
                    ConfigError);
    CHECK_THROWS_AS(validate_initial(MultiRectangleProfile{{}, {}}),
                    ConfigError);
    CHECK_THROWS_AS(validate_initial(MultiRectangleProfile{{1.0}, {1.0, 2.0}}),
                    ConfigError);
    CHECK_THROWS_AS(validate_initial(RectangleProfile{-1.0, 1.0}),
                    ConfigError);
    CHECK_NOTHROW(validate_initial(TrigonometricProfile{1.0, 1.0, 3}));
}
