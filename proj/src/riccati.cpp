#include "netlqg/riccati.hpp"

#include <cmath>
#include <limits>

namespace netlqg {

namespace {

constexpr double kTol = 1e-12;
constexpr int kMaxIter = 1000000;

// Effective measurement noise seen by the receiver when y (power C^2 P + V)
// crosses a channel of the given snr. V here is the physical measurement
// noise variance: 0 for a fully observed plant.
double effective_noise(double P, double C, double V, double snr) {
    const double signal_power = C * C * P + V;
    return V + signal_power / snr;
}

FilterSolution iterate_filter(const SystemParams& p, double V_meas, double C,
                              double snr, double divergence_threshold) {
    const double A2 = p.A * p.A;
    double P = p.W;
    double Sigma = 0;
    for (int i = 0; i < kMaxIter; ++i) {
        const double Ve = std::isinf(snr) ? V_meas : effective_noise(P, C, V_meas, snr);
        const double denom = C * C * P + Ve;
        Sigma = denom > 0 ? P * Ve / denom : 0.0;
        const double next = A2 * Sigma + p.W;
        if (next >= divergence_threshold || !std::isfinite(next))
            return {next, Sigma, false};
        if (std::abs(next - P) < kTol) return {next, Sigma, true};
        P = next;
    }
    return {P, Sigma, false};
}

} // namespace

ControlSolution control_steady_state(const SystemParams& p) {
    const double A2 = p.A * p.A;
    const double B2 = p.B * p.B;
    double S = p.Q;
    for (int i = 0; i < kMaxIter; ++i) {
        const double next = p.Q + A2 * p.R * S / (p.R + B2 * S);
        if (!std::isfinite(next)) return {S, 0, false, i};
        if (std::abs(next - S) < kTol) {
            const double L = p.A * p.B * next / (p.R + B2 * next);
            return {next, L, true, i + 1};
        }
        S = next;
    }
    return {S, p.A * p.B * S / (p.R + B2 * S), false, kMaxIter};
}

FilterSolution awgn_filter_steady_state(const SystemParams& p, double snr,
                                        double divergence_threshold) {
    // Unit-variance measurement model (C = 1, V = 1) regardless of mode.
    SystemParams q = p;
    return iterate_filter(q, 1.0, 1.0, snr, divergence_threshold);
}

FilterSolution link_filter_steady_state(const SystemParams& p, double snr,
                                        double divergence_threshold) {
    const double V_meas = p.observed == Observed::Fully ? 0.0 : p.V;
    return iterate_filter(p, V_meas, p.C, snr, divergence_threshold);
}

FilterSolution classical_filter_steady_state(const SystemParams& p) {
    if (p.observed == Observed::Fully) return {p.W, 0.0, true};
    return iterate_filter(p, p.V, p.C, std::numeric_limits<double>::infinity(), 1e15);
}

double computed_cost_per_stage(const SystemParams& p, double snr) {
    const auto filt = link_filter_steady_state(p, snr);
    if (!filt.converged) throw Diverged("link filter recursion unbounded at snr");
    const auto ctrl = control_steady_state(p);
    if (!ctrl.converged) throw Diverged("controller recursion did not converge");
    const double A2 = p.A * p.A;
    return p.Q * filt.Sigma + ctrl.S * (A2 * filt.Sigma + p.W - filt.Sigma);
}

double b_min(const SystemParams& p) {
    const auto ctrl = control_steady_state(p);
    if (!ctrl.converged) throw Diverged("controller recursion did not converge");
    const auto filt = classical_filter_steady_state(p);
    if (!filt.converged) throw Diverged("classical filter recursion unbounded");
    const double A2 = p.A * p.A;
    return p.Q * filt.Sigma + ctrl.S * (A2 * filt.Sigma + p.W - filt.Sigma);
}

} // namespace netlqg
