#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "netlqg/config_json.hpp"
#include "netlqg/model.hpp"
#include "netlqg/presets.hpp"

using namespace netlqg;

namespace {

// Numerical-integration oracle for differential entropy: -integral f ln f
// over a fine grid, density given in closed form.
double entropy_by_quadrature(NoiseFamily family, double sigma) {
    auto density = [&](double x) -> double {
        switch (family) {
        case NoiseFamily::Gaussian:
            return std::exp(-x * x / (2 * sigma * sigma)) /
                   (sigma * std::sqrt(2 * M_PI));
        case NoiseFamily::Laplace: {
            const double b = sigma / std::sqrt(2.0);
            return std::exp(-std::abs(x) / b) / (2 * b);
        }
        case NoiseFamily::Uniform: {
            const double half = sigma * std::sqrt(3.0);
            return std::abs(x) <= half ? 1.0 / (2 * half) : 0.0;
        }
        }
        return 0;
    };
    // Integrate the uniform family over its exact support; a grid cell
    // straddling the density edge costs more than the test tolerance.
    const double lim =
        family == NoiseFamily::Uniform ? sigma * std::sqrt(3.0) : 40 * sigma;
    const int n = 4000000;
    const double dx = 2 * lim / n;
    double h = 0;
    for (int i = 0; i < n; ++i) {
        const double x = -lim + (i + 0.5) * dx;
        const double f = density(x);
        if (f > 0) h -= f * std::log(f) * dx;
    }
    return h;
}

struct SampleStats {
    double mean = 0, var = 0, min = 0, max = 0;
};

SampleStats sample_stats(const NoiseSpec& spec, int n, std::uint64_t seed) {
    RandomStream rng(seed, 0);
    double sum = 0, sum2 = 0;
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < n; ++i) {
        const double x = sample_noise(spec, rng);
        sum += x;
        sum2 += x * x;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    const double mean = sum / n;
    return {mean, sum2 / n - mean * mean, lo, hi};
}

} // namespace

TEST_CASE("validate accepts the default preset") {
    ExperimentConfig cfg;  // A=2, B=C=1, Q=R=1, W=1, fully observed, Gaussian
    CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("validate lists every violation by field path") {
    ExperimentConfig cfg;
    cfg.params.R = 0;
    cfg.params.V = 1;  // fully observed forces V = 0
    try {
        validate(cfg);
        FAIL("expected InvalidConfig");
    } catch (const InvalidConfig& e) {
        auto has = [&](const std::string& needle) {
            return std::any_of(e.violations().begin(), e.violations().end(),
                               [&](const std::string& v) { return v.find(needle) == 0; });
        };
        CHECK(has("params.R"));
        CHECK(has("params.V"));
    }
}

TEST_CASE("validate rejects other invariant breaks") {
    ExperimentConfig cfg;
    cfg.params.Q = 1;
    cfg.params.B = 0;
    CHECK_THROWS_AS(validate(cfg), InvalidConfig);

    cfg = ExperimentConfig{};
    cfg.burn_in = cfg.horizon;
    CHECK_THROWS_AS(validate(cfg), InvalidConfig);

    cfg = ExperimentConfig{};
    cfg.channel.kind = ChannelKind::Awgn;
    cfg.channel.snr = -1;
    CHECK_THROWS_AS(validate(cfg), InvalidConfig);
}

TEST_CASE("uniform draws stay inside the unit-variance support") {
    NoiseSpec spec{NoiseFamily::Uniform, 1.0};
    const auto st = sample_stats(spec, 1000000, 7);
    CHECK(st.min >= -1.7320508075688772);
    CHECK(st.max <= 1.7320508075688772);
}

TEST_CASE("sampled moments match the spec for every family") {
    for (auto family : {NoiseFamily::Gaussian, NoiseFamily::Laplace, NoiseFamily::Uniform}) {
        NoiseSpec spec{family, 1.0};
        const auto st = sample_stats(spec, 1000000, 11);
        CAPTURE(to_string(family));
        CHECK(std::abs(st.mean) < 3.0 / 1000.0);
        CHECK(st.var == doctest::Approx(1.0).epsilon(0.02));
    }
}

TEST_CASE("noise sampling is deterministic given the stream") {
    NoiseSpec spec{NoiseFamily::Laplace, 2.0};
    RandomStream a(42, 3), b(42, 3);
    for (int i = 0; i < 100; ++i) CHECK(sample_noise(spec, a) == sample_noise(spec, b));
    RandomStream c(42, 4);
    bool any_diff = false;
    RandomStream a2(42, 3);
    for (int i = 0; i < 100; ++i)
        any_diff |= sample_noise(spec, a2) != sample_noise(spec, c);
    CHECK(any_diff);
}

TEST_CASE("differential entropy closed forms against quadrature oracle") {
    // Frozen oracle values, independently recomputed by entropy_by_quadrature.
    CHECK(differential_entropy({NoiseFamily::Gaussian, 1.0}) ==
          doctest::Approx(1.4189385).epsilon(1e-6));
    CHECK(differential_entropy({NoiseFamily::Laplace, 1.0}) ==
          doctest::Approx(1.3465736).epsilon(1e-6));
    CHECK(differential_entropy({NoiseFamily::Uniform, 1.0}) ==
          doctest::Approx(1.2424533).epsilon(1e-6));

    for (auto family : {NoiseFamily::Gaussian, NoiseFamily::Laplace, NoiseFamily::Uniform}) {
        const double oracle = entropy_by_quadrature(family, 1.0);
        CHECK(differential_entropy({family, 1.0}) == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("entropy ordering and scaling law") {
    const double hg = differential_entropy({NoiseFamily::Gaussian, 1.0});
    const double hl = differential_entropy({NoiseFamily::Laplace, 1.0});
    const double hu = differential_entropy({NoiseFamily::Uniform, 1.0});
    CHECK(hg > hl);
    CHECK(hl > hu);

    for (double s : {0.5, 1.0, 2.0, 10.0}) {
        for (auto family : {NoiseFamily::Gaussian, NoiseFamily::Laplace, NoiseFamily::Uniform}) {
            const double expected = differential_entropy({family, 1.0}) + std::log(s);
            CHECK(differential_entropy({family, s}) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("config json round trip") {
    for (const char* name : {"fig2", "fig3", "fig4", "fig5"}) {
        const auto cfg = preset(name);
        const auto doc = config_to_json(cfg);
        const auto back = config_from_json(doc);
        CHECK(config_to_json(back) == doc);
    }
}

TEST_CASE("config json rejects unknown keys and inactive-kind fields") {
    auto doc = config_to_json(preset("fig3"));
    doc["horizonn"] = 5;
    CHECK_THROWS_AS(config_from_json(doc), InvalidConfig);

    doc = config_to_json(preset("fig3"));
    doc["channel"]["snr"] = 10;  // quantized channel must not carry snr
    CHECK_THROWS_AS(config_from_json(doc), InvalidConfig);
}
