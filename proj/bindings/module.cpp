#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netlqg/bounds.hpp"
#include "netlqg/channel.hpp"
#include "netlqg/config_json.hpp"
#include "netlqg/presets.hpp"
#include "netlqg/report.hpp"
#include "netlqg/riccati.hpp"
#include "netlqg/sim.hpp"

namespace py = pybind11;
using namespace netlqg;

namespace {

py::dict record_to_dict(const SweepRecord& r) {
    py::dict d;
    auto put = [&](const char* key, const std::optional<double>& v) {
        d[key] = v ? py::cast(*v) : py::none();
    };
    d["control_var"] = r.control_var;
    put("info_bits", r.info_bits);
    put("sim_cost_mean", r.sim_cost_mean);
    put("sim_cost_stderr", r.sim_cost_stderr);
    put("computed_cost", r.computed_cost);
    put("bound_cost", r.bound_cost);
    d["diverged_fraction"] = r.diverged_fraction;
    return d;
}

py::list records_to_list(const std::vector<SweepRecord>& records) {
    py::list out;
    for (const auto& r : records) out.append(record_to_dict(r));
    return out;
}

NoiseSpec noise_spec(const std::string& family, double stddev) {
    NoiseSpec spec;
    spec.stddev = stddev;
    if (family == "gaussian") spec.family = NoiseFamily::Gaussian;
    else if (family == "laplace") spec.family = NoiseFamily::Laplace;
    else if (family == "uniform") spec.family = NoiseFamily::Uniform;
    else throw InvalidConfig({"family: unrecognized value '" + family + "'"});
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Scalar LQG control over constrained channels: Riccati solutions, "
              "information-theoretic cost bounds, quantizers, and Monte Carlo sweeps.";

    py::register_exception<InvalidConfig>(m, "InvalidConfigError", PyExc_ValueError);
    py::register_exception<Diverged>(m, "DivergedError", PyExc_ArithmeticError);
    py::register_exception<CostNotAchievable>(m, "CostNotAchievableError", PyExc_ValueError);
    py::register_exception<RateBelowStabilization>(m, "RateBelowStabilizationError",
                                                   PyExc_ValueError);
    py::register_exception<AllTrialsDiverged>(m, "AllTrialsDivergedError", PyExc_ArithmeticError);
    py::register_exception<DegenerateSamples>(m, "DegenerateSamplesError", PyExc_ValueError);

    py::class_<ControlSolution>(m, "ControlSolution")
        .def_readonly("S", &ControlSolution::S)
        .def_readonly("L", &ControlSolution::L)
        .def_readonly("converged", &ControlSolution::converged)
        .def_readonly("iterations", &ControlSolution::iterations);

    py::class_<FilterSolution>(m, "FilterSolution")
        .def_readonly("P", &FilterSolution::P)
        .def_readonly("Sigma", &FilterSolution::Sigma)
        .def_readonly("converged", &FilterSolution::converged);

    py::class_<Codebook>(m, "Codebook")
        .def_readonly("levels", &Codebook::levels)
        .def_readonly("thresholds", &Codebook::thresholds)
        .def("index_of", &Codebook::index_of);

    // The functional surface takes configs as JSON text so python callers use
    // the same strict schema as the CLI.
    auto parse = [](const std::string& text) { return config_from_json_text(text); };

    m.def("validate_config", [parse](const std::string& text) {
        return config_to_json(parse(text)).dump(2);
    }, py::arg("config_json"), "Validate a config document; returns the resolved JSON.");

    m.def("preset_config", [](const std::string& name) {
        return config_to_json(preset(name)).dump(2);
    }, py::arg("name"), "Built-in experiment config (fig2..fig5) as JSON text.");

    m.def("differential_entropy", [](const std::string& family, double stddev) {
        return differential_entropy(noise_spec(family, stddev));
    }, py::arg("family"), py::arg("stddev") = 1.0,
       "Closed-form differential entropy in nats.");

    m.def("entropy_power", [](const std::string& family, double stddev) {
        return entropy_power(noise_spec(family, stddev));
    }, py::arg("family"), py::arg("stddev") = 1.0);

    m.def("control_steady_state", [parse](const std::string& text) {
        return control_steady_state(parse(text).params);
    }, py::arg("config_json"));

    m.def("awgn_filter_steady_state", [parse](const std::string& text, double snr) {
        return awgn_filter_steady_state(parse(text).params, snr);
    }, py::arg("config_json"), py::arg("snr"));

    m.def("classical_filter_steady_state", [parse](const std::string& text) {
        return classical_filter_steady_state(parse(text).params);
    }, py::arg("config_json"));

    m.def("computed_cost_per_stage", [parse](const std::string& text, double snr) {
        return computed_cost_per_stage(parse(text).params, snr);
    }, py::arg("config_json"), py::arg("snr"));

    m.def("b_min", [parse](const std::string& text) {
        return b_min(parse(text).params);
    }, py::arg("config_json"));

    m.def("solve_mare", [parse](const std::string& text) {
        const auto sol = solve_mare(parse(text).params);
        return py::make_tuple(sol.S, sol.M);
    }, py::arg("config_json"));

    m.def("awgn_capacity", &awgn_capacity, py::arg("snr"), "0.5 log2(1 + snr), bits.");

    m.def("rate_lower_bound", [parse](double b, const std::string& text) {
        const auto cfg = parse(text);
        return rate_lower_bound(b, make_bound_context(cfg.params, cfg.disturbance));
    }, py::arg("cost"), py::arg("config_json"));

    m.def("cost_lower_bound_at_rate", [parse](double rate_bits, const std::string& text) {
        const auto cfg = parse(text);
        return cost_lower_bound_at_rate(rate_bits, make_bound_context(cfg.params, cfg.disturbance));
    }, py::arg("rate_bits"), py::arg("config_json"));

    m.def("uniform_quantize", [](double x, double step) {
        const auto q = uniform_quantize(x, step);
        return py::make_tuple(q.index, q.reconstruction);
    }, py::arg("x"), py::arg("step"));

    m.def("empirical_entropy", [](const std::vector<std::int64_t>& counts) {
        BinHistogram hist;
        std::int64_t idx = 0;
        for (std::int64_t c : counts) {
            if (c > 0) {
                hist.counts[idx] = c;
                hist.total += c;
            }
            ++idx;
        }
        return empirical_entropy(hist);
    }, py::arg("counts"), "Plug-in entropy in bits from a list of bin counts.");

    m.def("lloyd_max", [](std::vector<double> samples, int levels, double tol, int max_iter) {
        return lloyd_max(std::move(samples), levels, tol, max_iter);
    }, py::arg("samples"), py::arg("levels"), py::arg("tol") = 1e-9, py::arg("max_iter") = 500,
       py::return_value_policy::move);

    py::class_<LloydMaxResult>(m, "LloydMaxResult")
        .def_readonly("codebook", &LloydMaxResult::codebook)
        .def_readonly("iterations", &LloydMaxResult::iterations)
        .def_readonly("empty_cell_recoveries", &LloydMaxResult::empty_cell_recoveries)
        .def_readonly("mse_history", &LloydMaxResult::mse_history)
        .def_readonly("mse", &LloydMaxResult::mse)
        .def_readonly("converged", &LloydMaxResult::converged);

    m.def("monte_carlo", [parse](const std::string& text, int threads) {
        const auto mc = monte_carlo(parse(text), threads);
        py::dict d;
        d["mean"] = mc.mean;
        d["stderr"] = mc.stderr;
        d["diverged_fraction"] = mc.diverged_fraction;
        d["entropy_bits"] = mc.entropy_bits ? py::cast(*mc.entropy_bits) : py::none();
        d["trials_used"] = mc.trials_used;
        return d;
    }, py::arg("config_json"), py::arg("threads") = 1);

    m.def("snr_sweep", [parse](const std::string& text, const std::vector<double>& snrs,
                               int threads) {
        return records_to_list(snr_sweep(parse(text), snrs, threads));
    }, py::arg("config_json"), py::arg("snrs"), py::arg("threads") = 1);

    m.def("rate_sweep", [parse](const std::string& text, const std::vector<double>& grid,
                                int threads) {
        return records_to_list(rate_sweep(parse(text), grid, threads));
    }, py::arg("config_json"), py::arg("grid"), py::arg("threads") = 1);

    m.def("uncertain_a_sweep", [parse](const std::string& text, const std::vector<double>& grid,
                                       int threads) {
        return records_to_list(uncertain_a_sweep(parse(text), grid, threads));
    }, py::arg("config_json"), py::arg("grid"), py::arg("threads") = 1);

    m.attr("__version__") = kArtifactVersion;
}
