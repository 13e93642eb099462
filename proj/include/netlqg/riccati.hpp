#pragma once

#include "netlqg/model.hpp"

namespace netlqg {

/// Steady-state controller solution: cost-to-go coefficient S and gain L.
struct ControlSolution {
    double S = 0;
    double L = 0;
    bool converged = false;
    int iterations = 0;
};

/// Steady-state filter solution: prediction error variance P and filtered
/// error variance Sigma.
struct FilterSolution {
    double P = 0;
    double Sigma = 0;
    bool converged = false;
};

/// Fixed point of S = Q + A^2 R S / (R + B^2 S), iterated from S0 = Q.
/// L = A B S / (R + B^2 S). With B = 1 this is S = A^2 R S/(S+R) + Q,
/// L = A S/(S+R).
ControlSolution control_steady_state(const SystemParams& params);

/// Fixed point of the link filter recursion with unit-variance measurement
/// model: P <- A^2 P (1 - (P/(P+1)) (snr/(snr+1))) + W.
/// converged = false when the iterate exceeds divergence_threshold.
FilterSolution awgn_filter_steady_state(const SystemParams& params, double snr,
                                        double divergence_threshold = 1e12);

/// Mode-aware noisy-link filter: the observer transmits y with power
/// C^2 P + V, so the receiver's effective measurement noise is
/// V + (C^2 P + V)/snr. For a partially observed plant with C = V = 1 this
/// reduces exactly to awgn_filter_steady_state; for a fully observed plant
/// it reduces to P <- A^2 P/(snr+1) + W.
FilterSolution link_filter_steady_state(const SystemParams& params, double snr,
                                        double divergence_threshold = 1e12);

/// Classical steady-state prediction Riccati P = A^2 P V/(C^2 P + V) + W
/// (fully observed: P = W, Sigma = 0).
FilterSolution classical_filter_steady_state(const SystemParams& params);

/// Steady-state per-stage optimal cost over the noisy link:
/// b = Q Sigma + S (A^2 Sigma + W - Sigma), Sigma from
/// link_filter_steady_state. Throws Diverged below the stabilizing SNR.
double computed_cost_per_stage(const SystemParams& params, double snr);

/// Classical minimum per-stage cost (perfect channel, snr -> infinity taken
/// analytically). Fully observed: S W. Partially observed: uses the
/// classical filter with measurement noise V. Throws Diverged when the
/// configuration is unstabilizable.
double b_min(const SystemParams& params);

} // namespace netlqg
