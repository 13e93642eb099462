// netlqg command line runner: sweeps, bound curves, quantizer design,
// preset configs. Every run writes a CSV plus a manifest that reproduces it.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "netlqg/bounds.hpp"
#include "netlqg/config_json.hpp"
#include "netlqg/presets.hpp"
#include "netlqg/report.hpp"
#include "netlqg/riccati.hpp"
#include "netlqg/sim.hpp"

namespace {

using namespace netlqg;

struct CommonOpts {
    std::string config_path;
    std::string preset_name;
    std::string out_path;
    std::string grid_text;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<std::int64_t> horizon;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "experiment config JSON file");
    cmd->add_option("--preset", o.preset_name, "built-in preset: fig2..fig5");
    cmd->add_option("--out", o.out_path, "output CSV path (default stdout)");
    cmd->add_option("--grid", o.grid_text, "comma-separated sweep grid");
    cmd->add_option("--seed", o.seed, "master seed (overrides NETLQG_SEED)");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per point");
    cmd->add_option("--horizon", o.horizon, "episode length T");
    cmd->add_option("--threads", o.threads, "worker threads for trials");
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) grid.push_back(std::stod(item));
    }
    if (grid.empty()) throw InvalidConfig({"--grid: empty grid"});
    return grid;
}

ExperimentConfig resolve_config(const CommonOpts& o, const std::string& default_preset) {
    ExperimentConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw InvalidConfig({"--config: cannot open " + o.config_path});
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = config_from_json_text(buf.str());
    } else {
        cfg = preset(o.preset_name.empty() ? default_preset : o.preset_name);
    }
    if (o.seed) {
        cfg.master_seed = *o.seed;
    } else if (const char* env = std::getenv("NETLQG_SEED")) {
        cfg.master_seed = std::strtoull(env, nullptr, 10);
    }
    if (o.trials) cfg.trials = *o.trials;
    if (o.horizon) {
        cfg.horizon = *o.horizon;
        if (cfg.burn_in >= cfg.horizon) cfg.burn_in = cfg.horizon / 10;
    }
    return validate(cfg);
}

std::vector<double> resolve_grid(const CommonOpts& o, const std::string& default_preset) {
    if (!o.grid_text.empty()) return parse_grid(o.grid_text);
    return preset_grid(o.preset_name.empty() ? default_preset : o.preset_name);
}

void emit(const std::vector<SweepRecord>& records, const ExperimentConfig& cfg,
          const std::string& out_path, std::vector<std::string> warnings = {}) {
    if (out_path.empty()) {
        std::cout << csv_body(records);
        return;
    }
    write_csv(records, make_manifest(cfg, std::move(warnings)), out_path);
}

// Exit code 2 when no grid point produced a usable mean.
int sweep_exit_code(const std::vector<SweepRecord>& records) {
    for (const auto& r : records)
        if (r.sim_cost_mean) return 0;
    return 2;
}

int run_bound(const CommonOpts& o, bool grid_is_snr) {
    ExperimentConfig cfg = resolve_config(o, "fig3");
    const auto ctx = make_bound_context(cfg.params, cfg.disturbance);
    std::vector<double> grid =
        o.grid_text.empty() ? std::vector<double>{1.1, 1.5, 2, 3, 5} : parse_grid(o.grid_text);
    std::vector<SweepRecord> records;
    for (double g : grid) {
        SweepRecord r;
        r.control_var = g;
        const double rate = grid_is_snr ? awgn_capacity(g) : g;
        r.info_bits = rate;
        try {
            r.bound_cost = cost_lower_bound_at_rate(rate, ctx);
        } catch (const RateBelowStabilization&) {
        }
        records.push_back(r);
    }
    emit(records, cfg, o.out_path);
    return 0;
}

int run_quantizer_design(const std::string& samples_path, int levels,
                         const std::string& out_path) {
    std::ifstream in(samples_path);
    if (!in) throw InvalidConfig({"--samples: cannot open " + samples_path});
    std::vector<double> samples;
    double v;
    while (in >> v) samples.push_back(v);
    const auto result = lloyd_max(std::move(samples), levels);
    const std::string csv = codebook_csv(result.codebook);
    if (result.empty_cell_recoveries > 0)
        std::cerr << "warning: " << result.empty_cell_recoveries
                  << " empty cell(s) re-seeded during training\n";
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << csv;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scalar LQG control over constrained channels: sweeps and bounds"};
    app.require_subcommand(1);

    CommonOpts bound_opts, awgn_opts, rate_opts, ua_opts;
    bool bound_grid_is_snr = false;

    auto* bound_cmd = app.add_subcommand("bound", "print cost lower-bound curve points");
    add_common(bound_cmd, bound_opts);
    bound_cmd->add_flag("--snr", bound_grid_is_snr, "interpret grid as SNRs, not bits");

    auto* awgn_cmd = app.add_subcommand("awgn-sweep", "cost vs capacity over an SNR grid");
    add_common(awgn_cmd, awgn_opts);

    auto* rate_cmd = app.add_subcommand("rate-sweep", "cost vs quantizer entropy over a step grid");
    add_common(rate_cmd, rate_opts);

    auto* ua_cmd = app.add_subcommand("uncertain-a-sweep",
                                      "rate sweep with a randomly drawn plant parameter");
    add_common(ua_cmd, ua_opts);

    std::string qd_samples, qd_out;
    int qd_levels = 8;
    auto* qd_cmd = app.add_subcommand("quantizer-design",
                                      "train a Lloyd-Max codebook from a sample file");
    qd_cmd->add_option("--samples", qd_samples, "text file, one value per line")->required();
    qd_cmd->add_option("--levels", qd_levels, "number of reconstruction levels");
    qd_cmd->add_option("--out", qd_out, "codebook CSV path (default stdout)");

    std::string preset_name = "fig3";
    std::string preset_out;
    auto* preset_cmd = app.add_subcommand("preset", "emit a built-in config as JSON");
    preset_cmd->add_option("name", preset_name, "fig2, fig3, fig4, or fig5")->required();
    preset_cmd->add_option("--out", preset_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);

        if (*bound_cmd) return run_bound(bound_opts, bound_grid_is_snr);

        if (*awgn_cmd) {
            ExperimentConfig cfg = resolve_config(awgn_opts, "fig2");
            cfg.channel.kind = ChannelKind::Awgn;
            const auto records =
                snr_sweep(cfg, resolve_grid(awgn_opts, "fig2"), awgn_opts.threads);
            emit(records, cfg, awgn_opts.out_path);
            return sweep_exit_code(records);
        }

        if (*rate_cmd) {
            ExperimentConfig cfg = resolve_config(rate_opts, "fig3");
            if (cfg.channel.kind != ChannelKind::Quantized) {
                cfg.channel.kind = ChannelKind::Quantized;
                cfg.channel.quantizer = {QuantizerKind::Uniform, 0.1, 8};
            }
            const auto records =
                rate_sweep(cfg, resolve_grid(rate_opts, "fig3"), rate_opts.threads);
            emit(records, cfg, rate_opts.out_path);
            return sweep_exit_code(records);
        }

        if (*ua_cmd) {
            ExperimentConfig cfg = resolve_config(ua_opts, "fig5");
            const auto records =
                uncertain_a_sweep(cfg, resolve_grid(ua_opts, "fig5"), ua_opts.threads);
            std::vector<std::string> warnings = {
                "bound_cost is the fixed-A bound at uncertain_a.mean; reference only"};
            emit(records, cfg, ua_opts.out_path, std::move(warnings));
            return sweep_exit_code(records);
        }

        if (*qd_cmd) return run_quantizer_design(qd_samples, qd_levels, qd_out);

        if (*preset_cmd) {
            const auto doc = config_to_json(preset(preset_name));
            if (preset_out.empty()) {
                std::cout << doc.dump(2) << '\n';
            } else {
                std::ofstream out(preset_out);
                if (!out) throw std::runtime_error("cannot open output file: " + preset_out);
                out << doc.dump(2) << '\n';
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const InvalidConfig& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
