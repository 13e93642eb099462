#include <doctest.h>

#include <cmath>
#include <numbers>

#include "netlqg/bounds.hpp"
#include "netlqg/riccati.hpp"

using namespace netlqg;

namespace {

BoundContext default_ctx(NoiseFamily family = NoiseFamily::Gaussian) {
    return make_bound_context(SystemParams{}, NoiseSpec{family, 1.0});
}

} // namespace

TEST_CASE("entropy power closed forms") {
    CHECK(entropy_power({NoiseFamily::Gaussian, 1.0}) == doctest::Approx(1.0).epsilon(1e-9));
    // Hand-derived: exp(2(1 + ln sqrt 2))/(2 pi e) = e/pi.
    CHECK(entropy_power({NoiseFamily::Laplace, 1.0}) ==
          doctest::Approx(std::numbers::e / std::numbers::pi).epsilon(1e-9));
    // Hand-derived: (2 sqrt 3)^2/(2 pi e) = 6/(pi e).
    CHECK(entropy_power({NoiseFamily::Uniform, 1.0}) ==
          doctest::Approx(6.0 / (std::numbers::pi * std::numbers::e)).epsilon(1e-9));
}

TEST_CASE("entropy power never exceeds the variance") {
    for (auto family : {NoiseFamily::Gaussian, NoiseFamily::Laplace, NoiseFamily::Uniform}) {
        for (double s : {0.5, 1.0, 3.0}) {
            CHECK(entropy_power({family, s}) <= s * s + 1e-12);
        }
    }
}

TEST_CASE("scalar ARE solution and by-product") {
    const auto sol = solve_mare(SystemParams{});
    CHECK(sol.converged);
    // Oracle: S from the quadratic, then M = S - (S - Q)/A^2 by hand.
    CHECK(sol.S == doctest::Approx(4.2360680).epsilon(1e-6));
    CHECK(sol.M == doctest::Approx(3.4270510).epsilon(1e-6));

    // Residuals of both defining equations.
    CHECK(std::abs(sol.S - (1.0 + 4.0 * (sol.S - sol.M))) < 1e-9);
    CHECK(std::abs(sol.M - sol.S * sol.S / (1.0 + sol.S)) < 1e-9);
}

TEST_CASE("ARE degenerate cases") {
    SystemParams p;
    p.A = 0;
    auto sol = solve_mare(p);
    CHECK(sol.converged);
    CHECK(sol.S == doctest::Approx(1.0));
    CHECK(sol.M == doctest::Approx(p.B * p.B / (p.R + p.B * p.B)));

    p = SystemParams{};
    p.Q = 0;
    sol = solve_mare(p);
    CHECK(sol.converged);
    CHECK(sol.S == doctest::Approx(0.0));
    CHECK(sol.M == doctest::Approx(0.0));
}

TEST_CASE("ARE S agrees with the controller recursion") {
    for (double A : {0.5, 1.5, 2.0, 3.0}) {
        for (double B : {0.5, 1.0, 2.0}) {
            SystemParams p;
            p.A = A;
            p.B = B;
            const auto mare = solve_mare(p);
            const auto ctrl = control_steady_state(p);
            REQUIRE(mare.converged);
            REQUIRE(ctrl.converged);
            CHECK(std::abs(mare.S - ctrl.S) < 1e-9);
        }
    }
}

TEST_CASE("rate lower bound") {
    const auto ctx = default_ctx();
    SUBCASE("tends to log2|A| as cost grows") {
        CHECK(rate_lower_bound(1e15 * ctx.b_min, ctx) == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("half-bit excess exactly at b = b_min + N_w M") {
        CHECK(rate_lower_bound(ctx.b_min + ctx.N_w * ctx.M, ctx) ==
              doctest::Approx(1.5).epsilon(1e-9));
        CHECK(ctx.b_min + ctx.N_w * ctx.M == doctest::Approx(7.6631).epsilon(1e-4));
    }
    SUBCASE("unachievable cost") {
        CHECK_THROWS_AS(rate_lower_bound(ctx.b_min, ctx), CostNotAchievable);
        CHECK_THROWS_AS(rate_lower_bound(ctx.b_min - 1.0, ctx), CostNotAchievable);
    }
}

TEST_CASE("cost bound at a rate") {
    const auto ctx = default_ctx();
    CHECK(cost_lower_bound_at_rate(1.5, ctx) ==
          doctest::Approx(ctx.b_min + ctx.N_w * ctx.M).epsilon(1e-9));
    CHECK(cost_lower_bound_at_rate(60.0, ctx) == doctest::Approx(ctx.b_min).epsilon(1e-9));
    CHECK_THROWS_AS(cost_lower_bound_at_rate(1.0, ctx), RateBelowStabilization);
}

TEST_CASE("bound round trip and monotonicity") {
    const auto ctx = default_ctx();
    double prev_cost = 1e300;
    for (double r : {1.01, 1.5, 2.0, 5.0, 10.0}) {
        const double b = cost_lower_bound_at_rate(r, ctx);
        CHECK(rate_lower_bound(b, ctx) == doctest::Approx(r).epsilon(1e-9));
        CHECK(b < prev_cost);
        prev_cost = b;
    }
    double prev_rate = 1e300;
    for (double b : {4.5, 5.0, 7.0, 20.0, 100.0}) {
        const double r = rate_lower_bound(b, ctx);
        CHECK(r < prev_rate);
        prev_rate = r;
    }
}

TEST_CASE("awgn capacity") {
    CHECK(awgn_capacity(3.0) == doctest::Approx(1.0));
    CHECK(awgn_capacity(1.0) == doctest::Approx(0.5));
    CHECK(awgn_capacity(15.0) == doctest::Approx(2.0));
}

TEST_CASE("cost bound vs snr") {
    const auto ctx = default_ctx();
    CHECK_THROWS_AS(cost_lower_bound_vs_snr(3.0, ctx), RateBelowStabilization);
    // Hand-composed: capacity(15) = 2 bits, 2^{2(2-1)} - 1 = 3.
    CHECK(cost_lower_bound_vs_snr(15.0, ctx) ==
          doctest::Approx(ctx.b_min + ctx.N_w * ctx.M / 3.0).epsilon(1e-9));
    CHECK(cost_lower_bound_vs_snr(15.0, ctx) == doctest::Approx(5.3784).epsilon(1e-4));
    CHECK(cost_lower_bound_vs_snr(1e9, ctx) == doctest::Approx(ctx.b_min).epsilon(1e-6));
}

TEST_CASE("gaussian disturbance gives the weakly largest bound curve") {
    const auto g = default_ctx(NoiseFamily::Gaussian);
    const auto l = default_ctx(NoiseFamily::Laplace);
    const auto u = default_ctx(NoiseFamily::Uniform);
    for (double b : {4.3, 5.0, 8.0, 50.0}) {
        CHECK(rate_lower_bound(b, g) >= rate_lower_bound(b, l));
        CHECK(rate_lower_bound(b, l) >= rate_lower_bound(b, u));
    }
}
