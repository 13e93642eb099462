#pragma once

#include <cstdint>
#include <string>

#include "netlqg/errors.hpp"
#include "netlqg/random.hpp"

namespace netlqg {

enum class Observed { Fully, Partially };

/// Scalar plant and cost constants. W and V are variances (sigma_w^2, sigma_v^2).
struct SystemParams {
    double A = 2.0;  ///< state transition
    double B = 1.0;  ///< control multiplier
    double C = 1.0;  ///< output multiplier
    double Q = 1.0;  ///< state weight, >= 0
    double R = 1.0;  ///< control weight, > 0
    double W = 1.0;  ///< disturbance variance
    double V = 0.0;  ///< observation noise variance
    Observed observed = Observed::Fully;
};

enum class NoiseFamily { Gaussian, Laplace, Uniform };

/// Zero-mean disturbance distribution, parameterized by standard deviation
/// for every family (Laplace scale b = sigma/sqrt(2) is internal).
struct NoiseSpec {
    NoiseFamily family = NoiseFamily::Gaussian;
    double stddev = 1.0;
};

enum class ChannelKind { Perfect, Awgn, Quantized };
enum class QuantizerKind { Uniform, LloydMax };

struct QuantizerSpec {
    QuantizerKind kind = QuantizerKind::Uniform;
    double step = 0.1;  ///< Uniform only
    int levels = 8;     ///< LloydMax only
};

/// Observer-to-controller link.
struct ChannelSpec {
    ChannelKind kind = ChannelKind::Perfect;
    double snr = 10.0;  ///< Awgn only, linear power ratio
    QuantizerSpec quantizer;  ///< Quantized only
};

/// Random plant parameter a_t, drawn i.i.d. each step when enabled.
/// spread is the stddev (Gaussian) or half-width (Uniform).
struct UncertainA {
    bool enabled = false;
    enum class Family { Gaussian, Uniform };
    Family family = Family::Gaussian;
    double mean = 2.0;
    double spread = 0.0;
};

struct ExperimentConfig {
    SystemParams params;
    NoiseSpec disturbance;
    ChannelSpec channel;
    UncertainA uncertain_a;
    std::int64_t horizon = 100000;
    std::int64_t burn_in = 10000;
    int trials = 20;
    std::uint64_t master_seed = 1;
    double divergence_threshold = 1e12;
};

/// Returns cfg unchanged iff every invariant holds; otherwise throws
/// InvalidConfig listing all violations by field path.
ExperimentConfig validate(const ExperimentConfig& cfg);

/// One draw from the disturbance distribution.
double sample_noise(const NoiseSpec& spec, RandomStream& rng);

/// Closed-form differential entropy in nats.
double differential_entropy(const NoiseSpec& spec);

std::string to_string(NoiseFamily f);
std::string to_string(Observed o);
std::string to_string(ChannelKind k);
std::string to_string(QuantizerKind k);
std::string to_string(UncertainA::Family f);

} // namespace netlqg
