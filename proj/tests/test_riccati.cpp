#include <doctest.h>

#include <cmath>

#include "netlqg/riccati.hpp"

using namespace netlqg;

namespace {

SystemParams default_params() {
    return SystemParams{};  // A=2, B=C=1, Q=R=1, W=1, V=0, fully observed
}

SystemParams partial_params() {
    SystemParams p;
    p.observed = Observed::Partially;
    p.V = 1.0;
    return p;
}

// Hand-solved quadratics for A=2, Q=R=W=1: S^2 - 4S - 1 = 0 and
// P^2 - 4P - 1 = 0 share the positive root 2 + sqrt(5).
const double kGolden = 2.0 + std::sqrt(5.0);  // 4.2360680
const double kGain = (1.0 + std::sqrt(5.0)) / 2.0;  // 1.6180340

} // namespace

TEST_CASE("controller fixed point for the default plant") {
    const auto sol = control_steady_state(default_params());
    CHECK(sol.converged);
    CHECK(sol.S == doctest::Approx(kGolden).epsilon(1e-9));
    CHECK(sol.L == doctest::Approx(kGain).epsilon(1e-9));
}

TEST_CASE("controller degenerate cases") {
    SystemParams p = default_params();
    p.Q = 0;
    auto sol = control_steady_state(p);
    CHECK(sol.converged);
    CHECK(sol.S == 0.0);
    CHECK(sol.L == 0.0);

    p = default_params();
    p.A = 0;
    sol = control_steady_state(p);
    CHECK(sol.converged);
    CHECK(sol.S == doctest::Approx(1.0));
    CHECK(sol.L == doctest::Approx(0.0));
}

TEST_CASE("controller invariants: residual, S >= Q, closed-loop stability") {
    for (double A : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        for (double Q : {0.5, 1.0, 4.0}) {
            SystemParams p = default_params();
            p.A = A;
            p.Q = Q;
            const auto sol = control_steady_state(p);
            REQUIRE(sol.converged);
            CHECK(sol.S >= Q);
            const double residual = sol.S - (Q + A * A * p.R * sol.S / (p.R + sol.S));
            CHECK(std::abs(residual) < 1e-9);
            CHECK(std::abs(sol.L - A * sol.S / (sol.S + p.R)) < 1e-9);
            CHECK(std::abs(A - p.B * sol.L) < 1.0);
        }
    }
}

TEST_CASE("link filter fixed point at near-infinite snr") {
    const auto sol = awgn_filter_steady_state(default_params(), 1e9);
    CHECK(sol.converged);
    CHECK(sol.P == doctest::Approx(kGolden).epsilon(1e-6));
    CHECK(sol.Sigma == doctest::Approx((sol.P - 1.0) / 4.0).epsilon(1e-9));
}

TEST_CASE("link filter diverges at snr = A^2 - 1 and converges just above") {
    for (double A : {1.5, 2.0, 3.0}) {
        SystemParams p = default_params();
        p.A = A;
        const double threshold = A * A - 1.0;
        CHECK_FALSE(awgn_filter_steady_state(p, threshold).converged);
        CHECK(awgn_filter_steady_state(p, threshold + 0.01 * threshold).converged);
        CHECK_FALSE(link_filter_steady_state(p, threshold).converged);
        CHECK(link_filter_steady_state(p, threshold + 0.01 * threshold).converged);
    }
}

TEST_CASE("link filter with zero disturbance stays at zero") {
    SystemParams p = default_params();
    p.W = 0;
    const auto sol = awgn_filter_steady_state(p, 10.0);
    CHECK(sol.converged);
    CHECK(sol.P == 0.0);
}

TEST_CASE("filter fixed-point residual") {
    const auto sol = awgn_filter_steady_state(default_params(), 7.0);
    REQUIRE(sol.converged);
    const double P = sol.P;
    const double next =
        4.0 * P * (1.0 - (P / (P + 1.0)) * (7.0 / 8.0)) + 1.0;
    CHECK(std::abs(next - P) < 1e-9);
}

TEST_CASE("classical filter") {
    SUBCASE("fully observed") {
        const auto sol = classical_filter_steady_state(default_params());
        CHECK(sol.converged);
        CHECK(sol.P == doctest::Approx(1.0));
        CHECK(sol.Sigma == doctest::Approx(0.0));
    }
    SUBCASE("partially observed, A=2, W=V=1") {
        const auto sol = classical_filter_steady_state(partial_params());
        CHECK(sol.converged);
        CHECK(sol.P == doctest::Approx(kGolden).epsilon(1e-9));
        CHECK(sol.Sigma == doctest::Approx((kGolden - 1.0) / 4.0).epsilon(1e-9));
    }
    SUBCASE("partially observed, A=0.5, W=V=1") {
        // Oracle: fixed point of P = 0.25 P/(P+1) + 1, i.e. the positive
        // root of P^2 - 0.25 P - 1 = 0.
        const double oracle = (0.25 + std::sqrt(0.0625 + 4.0)) / 2.0;
        SystemParams p = partial_params();
        p.A = 0.5;
        const auto sol = classical_filter_steady_state(p);
        CHECK(sol.converged);
        CHECK(sol.P == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("computed cost per stage") {
    SUBCASE("fully observed, snr -> infinity, equals S*W") {
        CHECK(computed_cost_per_stage(default_params(), 1e9) ==
              doctest::Approx(kGolden).epsilon(1e-6));
    }
    SUBCASE("partially observed, snr -> infinity, cross-formula oracle") {
        // Independent formula S W + L^2 (R + S) Sigma at the classical
        // steady state; both routes must agree to 1e-6.
        const auto p = partial_params();
        const double got = computed_cost_per_stage(p, 1e12);
        const auto ctrl = control_steady_state(p);
        const auto filt = classical_filter_steady_state(p);
        const double oracle =
            ctrl.S * p.W + ctrl.L * ctrl.L * (p.R + ctrl.S) * filt.Sigma;
        CHECK(got == doctest::Approx(oracle).epsilon(1e-6));
        CHECK(got == doctest::Approx(15.3262379).epsilon(1e-6));
    }
    SUBCASE("below the stabilizing snr") {
        CHECK_THROWS_AS(computed_cost_per_stage(default_params(), 3.0), Diverged);
    }
}

TEST_CASE("computed cost is non-increasing in snr") {
    double prev = 1e300;
    for (double snr : {4.0, 5.0, 8.0, 16.0, 64.0, 1024.0}) {
        const double b = computed_cost_per_stage(default_params(), snr);
        CHECK(b <= prev + 1e-12);
        prev = b;
    }
}

TEST_CASE("limit consistency: computed cost at snr = 1e9 matches b_min") {
    for (const auto& p : {default_params(), partial_params()}) {
        const double lim = computed_cost_per_stage(p, 1e9);
        const double floor = b_min(p);
        CHECK(std::abs(lim - floor) / floor < 1e-6);
    }
}

TEST_CASE("b_min values") {
    CHECK(b_min(default_params()) == doctest::Approx(kGolden).epsilon(1e-7));
    CHECK(b_min(partial_params()) == doctest::Approx(15.3262379).epsilon(1e-7));

    SystemParams p = default_params();
    p.A = 0.5;
    p.Q = 0;
    CHECK(b_min(p) == doctest::Approx(0.0));
}
