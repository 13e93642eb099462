#pragma once

#include <string>
#include <vector>

#include "netlqg/model.hpp"

namespace netlqg {

/// Built-in experiment presets: "fig2" (AWGN link, Laplace disturbance),
/// "fig3" (uniform quantizer, Gaussian), "fig4" (fig3 partially observed,
/// sigma_v = 1), "fig5" (fig3 with the plant parameter drawn around A = 2).
/// Throws InvalidConfig for unknown names.
ExperimentConfig preset(const std::string& name);

/// Default sweep grid for a preset: SNRs for fig2, quantizer steps otherwise.
std::vector<double> preset_grid(const std::string& name);

} // namespace netlqg
