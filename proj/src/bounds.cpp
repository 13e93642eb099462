#include "netlqg/bounds.hpp"

#include <cmath>
#include <numbers>

#include "netlqg/riccati.hpp"

namespace netlqg {

namespace {
constexpr double kTol = 1e-12;
constexpr int kMaxIter = 1000000;

double log2_abs_a(const SystemParams& p) { return std::log2(std::abs(p.A)); }
} // namespace

double entropy_power(const NoiseSpec& spec) {
    const double h = differential_entropy(spec);
    return std::exp(2.0 * h) / (2.0 * std::numbers::pi * std::numbers::e);
}

MareSolution solve_mare(const SystemParams& p) {
    const double A2 = p.A * p.A;
    const double B2 = p.B * p.B;
    double S = p.Q;
    for (int i = 0; i < kMaxIter; ++i) {
        const double M = S * S * B2 / (p.R + B2 * S);
        const double next = p.Q + A2 * (S - M);
        if (!std::isfinite(next)) return {S, M, false};
        if (std::abs(next - S) < kTol) {
            const double Mf = next * next * B2 / (p.R + B2 * next);
            return {next, Mf, true};
        }
        S = next;
    }
    return {S, S * S * B2 / (p.R + B2 * S), false};
}

BoundContext make_bound_context(const SystemParams& params, const NoiseSpec& disturbance) {
    BoundContext ctx;
    ctx.params = params;
    ctx.N_w = entropy_power(disturbance);
    const auto mare = solve_mare(params);
    ctx.S = mare.S;
    ctx.M = mare.M;
    ctx.b_min = b_min(params);
    return ctx;
}

double rate_lower_bound(double b, const BoundContext& ctx) {
    if (!(b > ctx.b_min))
        throw CostNotAchievable("cost at or below b_min is not achievable at finite rate");
    return log2_abs_a(ctx.params) +
           0.5 * std::log2(1.0 + ctx.N_w * ctx.M / (b - ctx.b_min));
}

double cost_lower_bound_at_rate(double rate_bits, const BoundContext& ctx) {
    const double floor_bits = log2_abs_a(ctx.params);
    if (!(rate_bits > floor_bits))
        throw RateBelowStabilization("rate at or below log2|A| cannot stabilize the plant");
    const double excess = std::exp2(2.0 * (rate_bits - floor_bits)) - 1.0;
    return ctx.b_min + ctx.N_w * ctx.M / excess;
}

double awgn_capacity(double snr) { return 0.5 * std::log2(1.0 + snr); }

double cost_lower_bound_vs_snr(double snr, const BoundContext& ctx) {
    return cost_lower_bound_at_rate(awgn_capacity(snr), ctx);
}

} // namespace netlqg
