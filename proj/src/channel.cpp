#include "netlqg/channel.hpp"

#include <algorithm>
#include <cmath>

namespace netlqg {

int Codebook::index_of(double x) const {
    const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), x);
    return static_cast<int>(it - thresholds.begin());
}

QuantizeResult uniform_quantize(double x, double step) {
    // std::round ties away from zero, matching the documented convention.
    const double idx = std::round(x / step);
    return {static_cast<std::int64_t>(idx), idx * step};
}

double empirical_entropy(const BinHistogram& hist) {
    if (hist.total <= 0) return 0.0;
    const double total = static_cast<double>(hist.total);
    double bits = 0.0;
    for (const auto& [_, c] : hist.counts) {
        if (c <= 0) continue;
        const double p = static_cast<double>(c) / total;
        bits -= p * std::log2(p);
    }
    return bits;
}

namespace {

// Cell boundaries (as indices into the sorted samples) for the given
// thresholds. cell k spans [edges[k], edges[k+1]).
std::vector<std::size_t> cell_edges(const std::vector<double>& sorted,
                                    const std::vector<double>& thresholds) {
    std::vector<std::size_t> edges(thresholds.size() + 2);
    edges.front() = 0;
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        edges[i + 1] = static_cast<std::size_t>(
            std::upper_bound(sorted.begin(), sorted.end(), thresholds[i]) - sorted.begin());
    }
    edges.back() = sorted.size();
    return edges;
}

} // namespace

LloydMaxResult lloyd_max(std::vector<double> samples, int levels, double tol, int max_iter) {
    const int K = levels;
    if (K < 2) throw DegenerateSamples("need at least 2 levels");
    if (static_cast<int>(samples.size()) < K)
        throw DegenerateSamples("fewer samples than levels");
    std::sort(samples.begin(), samples.end());
    if (samples.front() == samples.back())
        throw DegenerateSamples("all samples identical");

    const std::size_t n = samples.size();
    // Prefix sums for O(1) cell means and squared errors.
    std::vector<double> pre(n + 1, 0.0), pre2(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        pre[i + 1] = pre[i] + samples[i];
        pre2[i + 1] = pre2[i] + samples[i] * samples[i];
    }

    // Seed levels at evenly spaced sample quantiles.
    std::vector<double> lv(K);
    for (int k = 0; k < K; ++k)
        lv[k] = samples[static_cast<std::size_t>((k + 0.5) / K * n)];
    std::sort(lv.begin(), lv.end());
    // Quantile seeding can collide on heavy-tailed data; nudge apart.
    for (int k = 1; k < K; ++k)
        if (lv[k] <= lv[k - 1]) lv[k] = std::nextafter(lv[k - 1], samples.back() + 1.0);

    LloydMaxResult result;
    std::vector<double> th(K - 1);
    for (int iter = 0; iter < max_iter; ++iter) {
        for (int k = 0; k + 1 < K; ++k) th[k] = 0.5 * (lv[k] + lv[k + 1]);
        auto edges = cell_edges(samples, th);

        // Re-seed empty cells from the most populous one before the
        // centroid step.
        for (int k = 0; k < K; ++k) {
            if (edges[k + 1] > edges[k]) continue;
            int big = 0;
            std::size_t best = 0;
            for (int j = 0; j < K; ++j) {
                const std::size_t cnt = edges[j + 1] - edges[j];
                if (cnt > best) { best = cnt; big = j; }
            }
            if (best < 2) throw DegenerateSamples("cannot populate every cell");
            const std::size_t mid = edges[big] + best / 2;
            const std::size_t lo = edges[big], hi = edges[big + 1];
            lv[k] = pre[hi] == pre[mid] ? samples[mid] : (pre[hi] - pre[mid]) / (hi - mid);
            lv[big] = (pre[mid] - pre[lo]) / (mid - lo);
            ++result.empty_cell_recoveries;
            std::sort(lv.begin(), lv.end());
            for (int j = 0; j + 1 < K; ++j) th[j] = 0.5 * (lv[j] + lv[j + 1]);
            edges = cell_edges(samples, th);
            k = -1; // recheck from the start
        }

        double move = 0.0;
        double sse = 0.0;
        for (int k = 0; k < K; ++k) {
            const std::size_t lo = edges[k], hi = edges[k + 1];
            const double mean = (pre[hi] - pre[lo]) / static_cast<double>(hi - lo);
            move = std::max(move, std::abs(mean - lv[k]));
            lv[k] = mean;
            sse += (pre2[hi] - pre2[lo]) - 2.0 * mean * (pre[hi] - pre[lo]) +
                   mean * mean * static_cast<double>(hi - lo);
        }
        result.mse_history.push_back(sse / static_cast<double>(n));
        result.iterations = iter + 1;
        if (move < tol) {
            result.converged = true;
            break;
        }
    }

    result.codebook.levels = lv;
    result.codebook.thresholds.resize(K - 1);
    for (int k = 0; k + 1 < K; ++k)
        result.codebook.thresholds[k] = 0.5 * (lv[k] + lv[k + 1]);
    result.mse = result.mse_history.empty() ? 0.0 : result.mse_history.back();
    return result;
}

double codebook_mse(const Codebook& cb, std::span<const double> samples) {
    if (samples.empty()) return 0.0;
    double sse = 0.0;
    for (double x : samples) {
        const double e = x - cb.levels[static_cast<std::size_t>(cb.index_of(x))];
        sse += e * e;
    }
    return sse / static_cast<double>(samples.size());
}

double awgn_transmit(double x, double signal_power, double snr, RandomStream& rng) {
    return x + std::sqrt(signal_power / snr) * rng.gaussian();
}

} // namespace netlqg
