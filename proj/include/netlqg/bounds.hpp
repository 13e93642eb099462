#pragma once

#include "netlqg/model.hpp"

namespace netlqg {

/// Everything the scalar rate/cost bound needs, precomputed once per system.
struct BoundContext {
    SystemParams params;
    double N_w = 0;    ///< entropy power of the disturbance
    double M = 0;      ///< ARE by-product
    double S = 0;      ///< ARE solution
    double b_min = 0;  ///< classical minimum per-stage cost
};

struct MareSolution {
    double S = 0;
    double M = 0;
    bool converged = false;
};

/// N(w) = exp(2 h(w)) / (2 pi e), h in nats.
double entropy_power(const NoiseSpec& spec);

/// Scalar solution of S = Q + A^2 (S - M), M = S^2 B^2 / (R + B^2 S),
/// iterated from S0 = Q. S equals control_steady_state's S.
MareSolution solve_mare(const SystemParams& params);

BoundContext make_bound_context(const SystemParams& params, const NoiseSpec& disturbance);

/// Minimum rate (bits per sample) needed to achieve per-stage cost b:
/// log2|A| + (1/2) log2(1 + N_w M / (b - b_min)).
/// Throws CostNotAchievable when b <= b_min.
double rate_lower_bound(double b, const BoundContext& ctx);

/// Algebraic inverse of rate_lower_bound:
/// b = b_min + N_w M / (2^{2(r - log2|A|)} - 1).
/// Throws RateBelowStabilization when r <= log2|A|.
double cost_lower_bound_at_rate(double rate_bits, const BoundContext& ctx);

/// (1/2) log2(1 + snr), bits per channel use.
double awgn_capacity(double snr);

/// cost_lower_bound_at_rate evaluated at the channel capacity.
double cost_lower_bound_vs_snr(double snr, const BoundContext& ctx);

} // namespace netlqg
