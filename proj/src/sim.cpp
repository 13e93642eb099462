#include "netlqg/sim.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "netlqg/bounds.hpp"
#include "netlqg/riccati.hpp"

namespace netlqg {

namespace {

// Stream id reserved for quantizer-training pilot runs; never collides with
// trial indices, which count up from zero.
constexpr std::uint64_t kPilotStream = 0x50494C4F54ULL;
constexpr std::size_t kMaxPilotSamples = 200000;

// Per-sweep-point channel state shared by all trials of a point.
struct LinkPlan {
    ChannelKind kind = ChannelKind::Perfect;
    double snr = 0;
    double step = 0;                    // Quantized/Uniform
    std::optional<Codebook> codebook;   // Quantized/LloydMax
    double quant_noise = 0;             // error-variance model for the filter
};

// Quantizes through a trained codebook, tiling the outermost cell width past
// the trained range. Rare excursions beyond the training data stay trackable
// instead of saturating, mirroring the unbounded mid-tread convention of the
// uniform quantizer; with an unstable plant, hard clipping lets the state
// linger at the codebook edge until it escapes.
struct CodePoint {
    std::int64_t index;
    double reconstruction;
};

CodePoint codebook_quantize(const Codebook& cb, double y) {
    const auto K = static_cast<std::int64_t>(cb.levels.size());
    const double lo = cb.levels.front();
    const double hi = cb.levels.back();
    const double step_hi = 2.0 * (hi - cb.thresholds.back());
    const double step_lo = 2.0 * (cb.thresholds.front() - lo);
    if (y > hi + 0.5 * step_hi) {
        const auto m = std::llround((y - hi) / step_hi);
        return {K - 1 + m, hi + static_cast<double>(m) * step_hi};
    }
    if (y < lo - 0.5 * step_lo) {
        const auto m = std::llround((lo - y) / step_lo);
        return {-m, lo - static_cast<double>(m) * step_lo};
    }
    const auto idx = cb.index_of(y);
    return {idx, cb.levels[static_cast<std::size_t>(idx)]};
}

SystemParams controller_params(const ExperimentConfig& cfg) {
    SystemParams p = cfg.params;
    if (cfg.uncertain_a.enabled) p.A = cfg.uncertain_a.mean;
    return p;
}

double draw_plant_a(const UncertainA& ua, RandomStream& rng) {
    // spread == 0 must not consume a draw: degenerate distributions keep the
    // stream byte-compatible with the fixed-A run.
    if (ua.spread == 0) return ua.mean;
    if (ua.family == UncertainA::Family::Gaussian)
        return ua.mean + ua.spread * rng.gaussian();
    return ua.mean + ua.spread * (2.0 * rng.uniform01() - 1.0);
}

EpisodeResult simulate(const ExperimentConfig& cfg, const LinkPlan& link,
                       std::uint64_t stream_id, std::vector<double>* tap) {
    RandomStream rng(cfg.master_seed, stream_id);
    const SystemParams& p = cfg.params;
    const SystemParams cp = controller_params(cfg);
    const double A_nom = cp.A;
    const auto ctrl = control_steady_state(cp);
    const bool fully = p.observed == Observed::Fully;
    const double V_meas = fully ? 0.0 : p.V;
    const bool uncertain = cfg.uncertain_a.enabled;

    double x = p.W > 0 ? std::sqrt(p.W) * rng.gaussian() : 0.0;
    double xhat = 0.0;
    double P = p.W;  // receiver's prediction error variance, data-independent
    double cost = 0.0;
    std::int64_t stages = 0;
    BinHistogram hist;
    EpisodeResult out;

    for (std::int64_t t = 0; t < cfg.horizon; ++t) {
        const double a = uncertain ? draw_plant_a(cfg.uncertain_a, rng) : p.A;
        const double v = V_meas > 0 ? std::sqrt(V_meas) * rng.gaussian() : 0.0;
        const double y = p.C * x + v;

        double received = y;
        double Ve = V_meas;
        switch (link.kind) {
        case ChannelKind::Perfect:
            break;
        case ChannelKind::Awgn: {
            // The transmit power tracks the receiver's own P recursion, so
            // both ends agree on it without side information.
            const double signal_power = p.C * p.C * P + V_meas;
            const double noise_var = signal_power / link.snr;
            received = y + std::sqrt(noise_var) * rng.gaussian();
            Ve = V_meas + noise_var;
            break;
        }
        case ChannelKind::Quantized: {
            std::int64_t idx;
            if (link.codebook) {
                const auto cp = codebook_quantize(*link.codebook, y);
                idx = cp.index;
                received = cp.reconstruction;
            } else {
                const auto q = uniform_quantize(y, link.step);
                idx = q.index;
                received = q.reconstruction;
            }
            if (t >= cfg.burn_in) hist.add(idx);
            Ve = V_meas + link.quant_noise;
            break;
        }
        }

        // Kalman measurement update with the link's effective noise.
        const double denom = p.C * p.C * P + Ve;
        const double gain = denom > 0 ? P * p.C / denom : 0.0;
        const double xf = xhat + gain * (received - p.C * xhat);
        const double Sigma = P - gain * p.C * P;

        const double u = -ctrl.L * xf;
        if (t >= cfg.burn_in) {
            cost += p.Q * x * x + p.R * u * u;
            ++stages;
            if (tap && tap->size() < kMaxPilotSamples) tap->push_back(y);
        }

        // W is the authoritative disturbance variance; the NoiseSpec carries
        // the shape. Presets keep disturbance.stddev == sqrt(W).
        const double w = sample_noise({cfg.disturbance.family, std::sqrt(p.W)}, rng);
        x = a * x + p.B * u + w;
        xhat = A_nom * xf + p.B * u;
        P = A_nom * A_nom * Sigma + p.W;

        if (!std::isfinite(x) || std::abs(x) >= cfg.divergence_threshold) {
            out.diverged = true;
            break;
        }
    }

    out.avg_cost = stages > 0 ? cost / static_cast<double>(stages) : 0.0;
    out.final_state_mag = std::abs(x);
    if (link.kind == ChannelKind::Quantized && hist.total > 0)
        out.entropy_bits = empirical_entropy(hist);
    return out;
}

// Builds the per-point channel state. Lloyd-Max codebooks are trained on the
// transmitted signal collected from a perfect-channel pilot episode.
LinkPlan plan_link(const ExperimentConfig& cfg) {
    LinkPlan plan;
    plan.kind = cfg.channel.kind;
    switch (cfg.channel.kind) {
    case ChannelKind::Perfect:
        break;
    case ChannelKind::Awgn:
        plan.snr = cfg.channel.snr;
        break;
    case ChannelKind::Quantized:
        if (cfg.channel.quantizer.kind == QuantizerKind::Uniform) {
            plan.step = cfg.channel.quantizer.step;
            plan.quant_noise = plan.step * plan.step / 12.0;
        } else {
            ExperimentConfig pilot = cfg;
            pilot.channel = ChannelSpec{};  // perfect link
            std::vector<double> samples;
            LinkPlan perfect;
            simulate(pilot, perfect, kPilotStream, &samples);
            auto trained = lloyd_max(std::move(samples), cfg.channel.quantizer.levels);
            plan.quant_noise = trained.mse;
            plan.codebook = std::move(trained.codebook);
        }
        break;
    }
    return plan;
}

MonteCarloResult aggregate(const std::vector<EpisodeResult>& episodes) {
    MonteCarloResult mc;
    std::vector<double> costs;
    double entropy_sum = 0;
    int entropy_n = 0;
    int diverged = 0;
    for (const auto& ep : episodes) {
        if (ep.diverged) {
            ++diverged;
            continue;
        }
        costs.push_back(ep.avg_cost);
        if (ep.entropy_bits) {
            entropy_sum += *ep.entropy_bits;
            ++entropy_n;
        }
    }
    mc.diverged_fraction = static_cast<double>(diverged) / static_cast<double>(episodes.size());
    if (costs.empty()) throw AllTrialsDiverged("every trial hit the divergence threshold");
    mc.trials_used = static_cast<int>(costs.size());
    double mean = 0;
    for (double c : costs) mean += c;
    mean /= static_cast<double>(costs.size());
    mc.mean = mean;
    if (costs.size() > 1) {
        double ss = 0;
        for (double c : costs) ss += (c - mean) * (c - mean);
        mc.stderr = std::sqrt(ss / (static_cast<double>(costs.size()) - 1.0) /
                              static_cast<double>(costs.size()));
    }
    if (entropy_n > 0) mc.entropy_bits = entropy_sum / entropy_n;
    return mc;
}

MonteCarloResult run_trials(const ExperimentConfig& cfg, const LinkPlan& plan, int threads) {
    const int n = cfg.trials;
    std::vector<EpisodeResult> episodes(static_cast<std::size_t>(n));
    const int workers = std::max(1, std::min(threads, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i)
            episodes[static_cast<std::size_t>(i)] =
                simulate(cfg, plan, static_cast<std::uint64_t>(i), nullptr);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int k = 0; k < workers; ++k) {
            pool.emplace_back([&, k] {
                for (int i = k; i < n; i += workers)
                    episodes[static_cast<std::size_t>(i)] =
                        simulate(cfg, plan, static_cast<std::uint64_t>(i), nullptr);
            });
        }
        for (auto& th : pool) th.join();
    }
    return aggregate(episodes);
}

} // namespace

EpisodeResult run_episode(const ExperimentConfig& cfg, std::uint64_t trial_index) {
    return simulate(cfg, plan_link(cfg), trial_index, nullptr);
}

MonteCarloResult monte_carlo(const ExperimentConfig& cfg, int threads) {
    return run_trials(validate(cfg), plan_link(cfg), threads);
}

std::vector<SweepRecord> snr_sweep(const ExperimentConfig& cfg,
                                   const std::vector<double>& snrs, int threads) {
    ExperimentConfig base = validate(cfg);
    const auto ctx = make_bound_context(base.params, base.disturbance);
    std::vector<SweepRecord> records;
    records.reserve(snrs.size());
    for (double snr : snrs) {
        ExperimentConfig point = base;
        point.channel.kind = ChannelKind::Awgn;
        point.channel.snr = snr;
        validate(point);

        SweepRecord rec;
        rec.control_var = snr;
        rec.info_bits = awgn_capacity(snr);
        try {
            rec.computed_cost = computed_cost_per_stage(point.params, snr);
        } catch (const Diverged&) {
        }
        try {
            rec.bound_cost = cost_lower_bound_vs_snr(snr, ctx);
        } catch (const RateBelowStabilization&) {
        }
        try {
            const auto mc = run_trials(point, plan_link(point), threads);
            rec.sim_cost_mean = mc.mean;
            rec.sim_cost_stderr = mc.stderr;
            rec.diverged_fraction = mc.diverged_fraction;
        } catch (const AllTrialsDiverged&) {
            rec.diverged_fraction = 1.0;
        }
        records.push_back(rec);
    }
    return records;
}

namespace {

std::vector<SweepRecord> quantized_sweep(const ExperimentConfig& cfg,
                                         const std::vector<double>& grid, int threads) {
    ExperimentConfig base = validate(cfg);
    const auto ctx = make_bound_context(controller_params(base), base.disturbance);
    std::vector<SweepRecord> records;
    records.reserve(grid.size());
    for (double g : grid) {
        ExperimentConfig point = base;
        point.channel.kind = ChannelKind::Quantized;
        if (point.channel.quantizer.kind == QuantizerKind::Uniform)
            point.channel.quantizer.step = g;
        else
            point.channel.quantizer.levels = static_cast<int>(std::lround(g));
        validate(point);

        SweepRecord rec;
        rec.control_var = g;
        try {
            const auto mc = run_trials(point, plan_link(point), threads);
            rec.sim_cost_mean = mc.mean;
            rec.sim_cost_stderr = mc.stderr;
            rec.diverged_fraction = mc.diverged_fraction;
            rec.info_bits = mc.entropy_bits;
            if (rec.info_bits) {
                try {
                    rec.bound_cost = cost_lower_bound_at_rate(*rec.info_bits, ctx);
                } catch (const RateBelowStabilization&) {
                }
            }
        } catch (const AllTrialsDiverged&) {
            rec.diverged_fraction = 1.0;
        }
        records.push_back(rec);
    }
    return records;
}

} // namespace

std::vector<SweepRecord> rate_sweep(const ExperimentConfig& cfg,
                                    const std::vector<double>& grid, int threads) {
    ExperimentConfig base = cfg;
    base.uncertain_a.enabled = false;
    return quantized_sweep(base, grid, threads);
}

std::vector<SweepRecord> uncertain_a_sweep(const ExperimentConfig& cfg,
                                           const std::vector<double>& grid, int threads) {
    if (!cfg.uncertain_a.enabled)
        throw InvalidConfig({"uncertain_a.enabled: uncertain_a_sweep requires enabled = true"});
    if (cfg.channel.kind != ChannelKind::Quantized)
        throw InvalidConfig({"channel.kind: uncertain_a_sweep requires a quantized channel"});
    return quantized_sweep(cfg, grid, threads);
}

} // namespace netlqg
