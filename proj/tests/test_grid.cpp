#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "jumpcoal/errors.hpp"
#include "jumpcoal/grid.hpp"

using namespace jumpcoal;

TEST_CASE("grid construction and knot rule") {
    Grid g = build_grid(20.0, 10);
    CHECK(g.mesh == doctest::Approx(2.0));
    CHECK(g.knot(0) == doctest::Approx(-9.0));
    CHECK(g.knot(9) == doctest::Approx(9.0));
    CHECK(g.left_edge() == doctest::Approx(-10.0));
    CHECK(g.right_edge() == doctest::Approx(10.0));

    Grid fine = build_grid(20.0, 160);
    CHECK(fine.mesh == doctest::Approx(0.125));

    CHECK_THROWS_AS(build_grid(20.0, 7), ConfigError);   // odd
    CHECK_THROWS_AS(build_grid(20.0, 2), ConfigError);   // too small
    CHECK_THROWS_AS(build_grid(-1.0, 10), ConfigError);
}

TEST_CASE("centered knots are symmetric bit for bit") {
    for (int n : {10, 160, 200, 400}) {
        Grid g = build_grid(20.0, n);
        for (int i = 0; i < n; ++i)
            CHECK(g.knot(i) == -g.knot(n - 1 - i));
    }
}

TEST_CASE("quadrature weight patterns") {
    SUBCASE("simpson, odd half-range") {
        WeightTable t = quadrature_weights(QuadratureRule::simpson, 3);
        REQUIRE(t.values.size() == 4);
        CHECK(t.values[0] == doctest::Approx(4.0 / 3.0));
        CHECK(t.values[1] == doctest::Approx(2.0 / 3.0));
        CHECK(t.values[2] == doctest::Approx(4.0 / 3.0));
        CHECK(t.values[3] == doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("simpson, even half-range") {
        WeightTable t = quadrature_weights(QuadratureRule::simpson, 4);
        REQUIRE(t.values.size() == 5);
        CHECK(t.values[0] == doctest::Approx(2.0 / 3.0));
        CHECK(t.values[1] == doctest::Approx(4.0 / 3.0));
        CHECK(t.values[2] == doctest::Approx(2.0 / 3.0));
        CHECK(t.values[3] == doctest::Approx(4.0 / 3.0));
        CHECK(t.values[4] == doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("trapezoid") {
        WeightTable t = quadrature_weights(QuadratureRule::trapezoid, 2);
        REQUIRE(t.values.size() == 3);
        CHECK(t.values[0] == 1.0);
        CHECK(t.values[1] == 1.0);
        CHECK(t.values[2] == 0.5);
    }
    SUBCASE("simpson with half-range 1 falls back to trapezoid") {
        std::vector<std::string> warnings;
        WeightTable t =
            quadrature_weights(QuadratureRule::simpson, 1, &warnings);
        CHECK(t.rule == QuadratureRule::trapezoid);
        CHECK(warnings.size() == 1);
    }
    CHECK_THROWS_AS(quadrature_weights(QuadratureRule::simpson, 0),
                    ConfigError);
}

TEST_CASE("weight normalization holds exactly") {
    // rational check with integer numerators: simpson weights are thirds,
    // trapezoid weights are halves
    for (int jstar = 2; jstar <= 1000; ++jstar) {
        WeightTable s = quadrature_weights(QuadratureRule::simpson, jstar);
        std::int64_t sum3 = std::llround(3.0 * s.values[0]);
        for (int j = 1; j <= jstar; ++j)
            sum3 += 2 * std::llround(3.0 * s.values[j]);
        CHECK(sum3 == 6LL * jstar);

        WeightTable t = quadrature_weights(QuadratureRule::trapezoid, jstar);
        std::int64_t sum2 = std::llround(2.0 * t.values[0]);
        for (int j = 1; j <= jstar; ++j)
            sum2 += 2 * std::llround(2.0 * t.values[j]);
        CHECK(sum2 == 4LL * jstar);

        for (double w : s.values) CHECK(w > 0.0);
    }
}

TEST_CASE("offset resolution per boundary mode") {
    // published index examples are 1-based; these use 0-based indices
    std::vector<double> v{1, 2, 3, 4, 5, 6, 7, 8}; // n_1 .. n_8

    SUBCASE("periodic wraps a single period") {
        // i = 2, offset -3 -> n_7 (1-based)
        CHECK(resolve_offset(v, 1, -3, BoundaryMode::periodic) == 7.0);
        CHECK(resolve_offset(v, 6, 3, BoundaryMode::periodic) == 2.0);
        CHECK(resolve_offset(v, 3, 2, BoundaryMode::periodic) == 6.0);
    }
    SUBCASE("dirichlet zero-fills") {
        CHECK(resolve_offset(v, 6, 3, BoundaryMode::dirichlet) == 0.0);
        CHECK(resolve_offset(v, 1, -3, BoundaryMode::dirichlet) == 0.0);
        CHECK(resolve_offset(v, 3, 3, BoundaryMode::dirichlet) == 7.0);
    }
    SUBCASE("asymptotic clamps to the edges") {
        CHECK(resolve_offset(v, 0, -2, BoundaryMode::asymptotic) == 1.0);
        CHECK(resolve_offset(v, 7, 2, BoundaryMode::asymptotic) == 8.0);
    }
    SUBCASE("combined modes mix the rules") {
        const auto combined = BoundaryMode::left_asymptotic_right_dirichlet;
        CHECK(resolve_offset(v, 0, -2, combined) == 1.0);
        CHECK(resolve_offset(v, 7, 2, combined) == 0.0);
        const auto mirrored = BoundaryMode::left_dirichlet_right_asymptotic;
        CHECK(resolve_offset(v, 0, -2, mirrored) == 0.0);
        CHECK(resolve_offset(v, 7, 2, mirrored) == 8.0);
    }
    SUBCASE("offsets at or beyond N/2 violate the contract") {
        CHECK_THROWS_AS(resolve_offset(v, 0, 4, BoundaryMode::periodic),
                        std::invalid_argument);
        CHECK_THROWS_AS(resolve_offset(v, 0, -4, BoundaryMode::dirichlet),
                        std::invalid_argument);
        CHECK_NOTHROW(resolve_offset(v, 0, 3, BoundaryMode::periodic));
    }
}

TEST_CASE("periodic resolution is the modular index bijection") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const int n = 12;
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);

    for (int i = 0; i < n; ++i)
        for (int j = -(n / 2 - 1); j < n / 2; ++j) {
            const int wrapped = ((i + j) % n + n) % n;
            CHECK(resolve_offset(v, i, j, BoundaryMode::periodic) ==
                  v[wrapped]);
        }
}

TEST_CASE("constant fields resolve to the constant except dirichlet spill") {
    const int n = 10;
    std::vector<double> v(n, 3.25);
    for (BoundaryMode mode :
         {BoundaryMode::periodic, BoundaryMode::asymptotic,
          BoundaryMode::dirichlet,
          BoundaryMode::left_asymptotic_right_dirichlet,
          BoundaryMode::left_dirichlet_right_asymptotic}) {
        for (int i = 0; i < n; ++i)
            for (int j = -(n / 2 - 1); j < n / 2; ++j) {
                const double r = resolve_offset(v, i, j, mode);
                const int q = i + j;
                const bool spill = q < 0 || q >= n;
                const bool zero_side =
                    mode == BoundaryMode::dirichlet ||
                    (mode == BoundaryMode::left_asymptotic_right_dirichlet &&
                     q >= n) ||
                    (mode == BoundaryMode::left_dirichlet_right_asymptotic &&
                     q < 0);
                if (spill && zero_side)
                    CHECK(r == 0.0);
                else
                    CHECK(r == 3.25);
            }
    }
}
