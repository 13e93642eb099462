#include "netlqg/model.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace netlqg {

namespace {

void check(std::vector<std::string>& out, bool ok, const std::string& msg) {
    if (!ok) out.push_back(msg);
}

} // namespace

ExperimentConfig validate(const ExperimentConfig& cfg) {
    std::vector<std::string> v;
    const auto& p = cfg.params;

    check(v, std::isfinite(p.A), "params.A: must be finite");
    check(v, std::isfinite(p.B), "params.B: must be finite");
    check(v, std::isfinite(p.C), "params.C: must be finite");
    check(v, p.R > 0, "params.R: must be > 0");
    check(v, p.Q >= 0, "params.Q: must be >= 0");
    check(v, p.W >= 0, "params.W: must be >= 0");
    check(v, p.V >= 0, "params.V: must be >= 0");
    if (p.observed == Observed::Fully) {
        check(v, p.V == 0, "params.V: fully observed requires V = 0");
        check(v, p.C == 1, "params.C: fully observed requires C = 1");
    }
    if (p.Q > 0) check(v, p.B != 0, "params.B: must be nonzero when Q > 0");

    check(v, cfg.disturbance.stddev > 0, "disturbance.stddev: must be > 0");

    switch (cfg.channel.kind) {
    case ChannelKind::Perfect:
        break;
    case ChannelKind::Awgn:
        check(v, cfg.channel.snr > 0 && std::isfinite(cfg.channel.snr),
              "channel.snr: must be finite and > 0");
        break;
    case ChannelKind::Quantized:
        if (cfg.channel.quantizer.kind == QuantizerKind::Uniform) {
            check(v, cfg.channel.quantizer.step > 0, "channel.quantizer.step: must be > 0");
        } else {
            check(v, cfg.channel.quantizer.levels >= 2, "channel.quantizer.levels: must be >= 2");
        }
        break;
    }

    if (cfg.uncertain_a.enabled) {
        check(v, cfg.uncertain_a.spread >= 0, "uncertain_a.spread: must be >= 0");
        check(v, std::isfinite(cfg.uncertain_a.mean), "uncertain_a.mean: must be finite");
    }

    check(v, cfg.horizon >= 10, "horizon: must be >= 10");
    check(v, cfg.burn_in >= 0, "burn_in: must be >= 0");
    check(v, cfg.burn_in < cfg.horizon, "burn_in: must be < horizon");
    check(v, cfg.trials >= 1, "trials: must be >= 1");
    check(v, cfg.divergence_threshold > 0, "divergence_threshold: must be > 0");

    if (!v.empty()) throw InvalidConfig(std::move(v));
    return cfg;
}

double sample_noise(const NoiseSpec& spec, RandomStream& rng) {
    const double s = spec.stddev;
    switch (spec.family) {
    case NoiseFamily::Gaussian:
        return s * rng.gaussian();
    case NoiseFamily::Laplace: {
        // Inverse CDF with scale b = sigma/sqrt(2).
        const double b = s / std::numbers::sqrt2;
        const double u = rng.uniform01() - 0.5;
        return (u < 0 ? b : -b) * std::log(1.0 - 2.0 * std::abs(u));
    }
    case NoiseFamily::Uniform: {
        const double half = s * std::sqrt(3.0);
        return half * (2.0 * rng.uniform01() - 1.0);
    }
    }
    return 0.0;
}

double differential_entropy(const NoiseSpec& spec) {
    const double s = spec.stddev;
    switch (spec.family) {
    case NoiseFamily::Gaussian:
        return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * s * s);
    case NoiseFamily::Laplace:
        return 1.0 + std::log(2.0 * s / std::numbers::sqrt2);
    case NoiseFamily::Uniform:
        return std::log(2.0 * s * std::sqrt(3.0));
    }
    return 0.0;
}

std::string to_string(NoiseFamily f) {
    switch (f) {
    case NoiseFamily::Gaussian: return "gaussian";
    case NoiseFamily::Laplace: return "laplace";
    case NoiseFamily::Uniform: return "uniform";
    }
    return "?";
}

std::string to_string(Observed o) {
    return o == Observed::Fully ? "fully" : "partially";
}

std::string to_string(ChannelKind k) {
    switch (k) {
    case ChannelKind::Perfect: return "perfect";
    case ChannelKind::Awgn: return "awgn";
    case ChannelKind::Quantized: return "quantized";
    }
    return "?";
}

std::string to_string(QuantizerKind k) {
    return k == QuantizerKind::Uniform ? "uniform" : "lloyd_max";
}

std::string to_string(UncertainA::Family f) {
    return f == UncertainA::Family::Gaussian ? "gaussian" : "uniform";
}

} // namespace netlqg
