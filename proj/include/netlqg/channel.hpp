#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "netlqg/model.hpp"
#include "netlqg/random.hpp"

namespace netlqg {

/// Scalar quantizer: ascending reconstruction levels with decision
/// thresholds between adjacent levels (|thresholds| = |levels| - 1).
struct Codebook {
    std::vector<double> levels;
    std::vector<double> thresholds;

    /// Index of the level whose cell contains x (nearest neighbor after
    /// Lloyd-Max convergence, since thresholds are midpoints).
    int index_of(double x) const;
};

/// Occupancy counts of quantizer cells; empty cells are absent keys.
struct BinHistogram {
    std::map<std::int64_t, std::int64_t> counts;
    std::int64_t total = 0;

    void add(std::int64_t index) {
        ++counts[index];
        ++total;
    }
};

struct QuantizeResult {
    std::int64_t index = 0;
    double reconstruction = 0;
};

/// Mid-tread, unbounded-range uniform quantizer. index = round(x/step) with
/// ties rounded half away from zero; reconstruction = index * step.
QuantizeResult uniform_quantize(double x, double step);

/// Plug-in entropy of the cell occupancy, in bits.
double empirical_entropy(const BinHistogram& hist);

struct LloydMaxResult {
    Codebook codebook;
    int iterations = 0;
    int empty_cell_recoveries = 0;     ///< warning count, not a failure
    std::vector<double> mse_history;   ///< one entry per iteration, non-increasing
    double mse = 0;                    ///< final training MSE
    bool converged = false;
};

/// Lloyd-Max design on empirical samples: alternate midpoint thresholds and
/// conditional-mean levels until the largest level movement drops below tol.
/// Empty cells are re-seeded by splitting the most populous cell.
/// Throws DegenerateSamples when the samples cannot support K levels.
LloydMaxResult lloyd_max(std::vector<double> samples, int levels,
                         double tol = 1e-9, int max_iter = 500);

/// Mean squared error of nearest-cell reconstruction over the samples.
double codebook_mse(const Codebook& cb, std::span<const double> samples);

/// x plus Gaussian channel noise of variance signal_power / snr.
double awgn_transmit(double x, double signal_power, double snr, RandomStream& rng);

} // namespace netlqg
