#pragma once

#include <optional>
#include <vector>

#include "netlqg/channel.hpp"
#include "netlqg/model.hpp"

namespace netlqg {

struct EpisodeResult {
    double avg_cost = 0;
    std::optional<double> entropy_bits;  ///< Quantized channels only
    bool diverged = false;
    double final_state_mag = 0;
};

/// One tradeoff point of a sweep.
struct SweepRecord {
    double control_var = 0;  ///< snr, step, or level count
    std::optional<double> info_bits;
    std::optional<double> sim_cost_mean;
    std::optional<double> sim_cost_stderr;
    std::optional<double> computed_cost;  ///< AWGN only
    std::optional<double> bound_cost;
    double diverged_fraction = 0;
};

struct MonteCarloResult {
    double mean = 0;
    double stderr = 0;
    double diverged_fraction = 0;
    std::optional<double> entropy_bits;
    int trials_used = 0;
};

/// Simulates one closed-loop episode. Pure function of (cfg, trial_index):
/// the random stream is derived from (master_seed, trial_index), so results
/// do not depend on execution order or worker count.
EpisodeResult run_episode(const ExperimentConfig& cfg, std::uint64_t trial_index);

/// Mean/stderr of avg_cost over non-diverged trials; diverged trials are
/// excluded from the mean but reported through diverged_fraction.
/// Throws AllTrialsDiverged when no trial survives.
MonteCarloResult monte_carlo(const ExperimentConfig& cfg, int threads = 1);

/// One record per snr: capacity, computed cost, bound cost, simulated stats.
std::vector<SweepRecord> snr_sweep(const ExperimentConfig& cfg,
                                   const std::vector<double>& snrs, int threads = 1);

/// One record per quantizer grid value (step for Uniform, level count for
/// LloydMax): empirical entropy as the information axis, bound cost at that
/// entropy.
std::vector<SweepRecord> rate_sweep(const ExperimentConfig& cfg,
                                    const std::vector<double>& grid, int threads = 1);

/// rate_sweep with the plant parameter drawn per UncertainA each step while
/// the controller keeps the mean-A gains. The bound column carries the
/// fixed-A bound at the mean, a labeled reference only.
std::vector<SweepRecord> uncertain_a_sweep(const ExperimentConfig& cfg,
                                           const std::vector<double>& grid,
                                           int threads = 1);

} // namespace netlqg
