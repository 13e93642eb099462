#include "netlqg/presets.hpp"

namespace netlqg {

ExperimentConfig preset(const std::string& name) {
    ExperimentConfig cfg;  // A=2, B=C=1, Q=R=1, W=1, fully observed, Gaussian
    if (name == "fig2") {
        cfg.disturbance.family = NoiseFamily::Laplace;
        cfg.channel.kind = ChannelKind::Awgn;
        cfg.channel.snr = 8.0;
    } else if (name == "fig3") {
        cfg.channel.kind = ChannelKind::Quantized;
        cfg.channel.quantizer = {QuantizerKind::Uniform, 0.1, 8};
    } else if (name == "fig4") {
        cfg.params.observed = Observed::Partially;
        cfg.params.V = 1.0;
        cfg.channel.kind = ChannelKind::Quantized;
        cfg.channel.quantizer = {QuantizerKind::Uniform, 0.1, 8};
    } else if (name == "fig5") {
        cfg.channel.kind = ChannelKind::Quantized;
        cfg.channel.quantizer = {QuantizerKind::Uniform, 0.1, 8};
        cfg.uncertain_a.enabled = true;
        cfg.uncertain_a.family = UncertainA::Family::Gaussian;
        cfg.uncertain_a.mean = 2.0;
        cfg.uncertain_a.spread = 0.2;
    } else {
        throw InvalidConfig({"preset: unknown preset '" + name + "'"});
    }
    return validate(cfg);
}

std::vector<double> preset_grid(const std::string& name) {
    if (name == "fig2") return {4, 5, 8, 16, 64, 1024};
    return {1.0, 0.5, 0.25, 0.1, 0.01};
}

} // namespace netlqg
