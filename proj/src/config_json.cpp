#include "netlqg/config_json.hpp"

#include <set>

namespace netlqg {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& path,
                    const std::set<std::string>& known,
                    std::vector<std::string>& errors) {
    for (const auto& [key, _] : obj.items()) {
        if (!known.contains(key))
            errors.push_back(path + key + ": unknown key");
    }
}

template <typename T>
void get_field(const json& obj, const std::string& path, const std::string& key,
               T& out, std::vector<std::string>& errors) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        errors.push_back(path + key + ": wrong type");
    }
}

template <typename Enum>
void get_enum(const json& obj, const std::string& path, const std::string& key,
              Enum& out, const std::vector<std::pair<std::string, Enum>>& table,
              std::vector<std::string>& errors) {
    if (!obj.contains(key)) return;
    std::string s;
    get_field(obj, path, key, s, errors);
    for (const auto& [name, value] : table) {
        if (s == name) {
            out = value;
            return;
        }
    }
    errors.push_back(path + key + ": unrecognized value '" + s + "'");
}

const std::vector<std::pair<std::string, NoiseFamily>> kNoiseFamilies = {
    {"gaussian", NoiseFamily::Gaussian},
    {"laplace", NoiseFamily::Laplace},
    {"uniform", NoiseFamily::Uniform}};

const std::vector<std::pair<std::string, UncertainA::Family>> kUncertainFamilies = {
    {"gaussian", UncertainA::Family::Gaussian},
    {"uniform", UncertainA::Family::Uniform}};

} // namespace

ExperimentConfig config_from_json(const json& doc) {
    std::vector<std::string> errors;
    ExperimentConfig cfg;
    if (!doc.is_object()) throw InvalidConfig({"document: must be a JSON object"});
    reject_unknown(doc, "", {"params", "disturbance", "channel", "uncertain_a",
                             "horizon", "burn_in", "trials", "master_seed",
                             "divergence_threshold"},
                   errors);

    if (doc.contains("params")) {
        const auto& p = doc.at("params");
        reject_unknown(p, "params.", {"A", "B", "C", "Q", "R", "W", "V", "observed"}, errors);
        get_field(p, "params.", "A", cfg.params.A, errors);
        get_field(p, "params.", "B", cfg.params.B, errors);
        get_field(p, "params.", "C", cfg.params.C, errors);
        get_field(p, "params.", "Q", cfg.params.Q, errors);
        get_field(p, "params.", "R", cfg.params.R, errors);
        get_field(p, "params.", "W", cfg.params.W, errors);
        get_field(p, "params.", "V", cfg.params.V, errors);
        get_enum(p, "params.", "observed", cfg.params.observed,
                 {{"fully", Observed::Fully}, {"partially", Observed::Partially}}, errors);
    }

    if (doc.contains("disturbance")) {
        const auto& d = doc.at("disturbance");
        reject_unknown(d, "disturbance.", {"family", "stddev"}, errors);
        get_enum(d, "disturbance.", "family", cfg.disturbance.family, kNoiseFamilies, errors);
        get_field(d, "disturbance.", "stddev", cfg.disturbance.stddev, errors);
    }

    if (doc.contains("channel")) {
        const auto& c = doc.at("channel");
        reject_unknown(c, "channel.", {"kind", "snr", "quantizer"}, errors);
        get_enum(c, "channel.", "kind", cfg.channel.kind,
                 {{"perfect", ChannelKind::Perfect},
                  {"awgn", ChannelKind::Awgn},
                  {"quantized", ChannelKind::Quantized}},
                 errors);
        // Only the active kind's fields may appear.
        if (c.contains("snr") && cfg.channel.kind != ChannelKind::Awgn)
            errors.push_back("channel.snr: only valid for kind 'awgn'");
        if (c.contains("quantizer") && cfg.channel.kind != ChannelKind::Quantized)
            errors.push_back("channel.quantizer: only valid for kind 'quantized'");
        get_field(c, "channel.", "snr", cfg.channel.snr, errors);
        if (c.contains("quantizer")) {
            const auto& q = c.at("quantizer");
            reject_unknown(q, "channel.quantizer.", {"type", "step", "levels"}, errors);
            get_enum(q, "channel.quantizer.", "type", cfg.channel.quantizer.kind,
                     {{"uniform", QuantizerKind::Uniform},
                      {"lloyd_max", QuantizerKind::LloydMax}},
                     errors);
            if (q.contains("step") && cfg.channel.quantizer.kind != QuantizerKind::Uniform)
                errors.push_back("channel.quantizer.step: only valid for type 'uniform'");
            if (q.contains("levels") && cfg.channel.quantizer.kind != QuantizerKind::LloydMax)
                errors.push_back("channel.quantizer.levels: only valid for type 'lloyd_max'");
            get_field(q, "channel.quantizer.", "step", cfg.channel.quantizer.step, errors);
            get_field(q, "channel.quantizer.", "levels", cfg.channel.quantizer.levels, errors);
        }
    }

    if (doc.contains("uncertain_a")) {
        const auto& u = doc.at("uncertain_a");
        reject_unknown(u, "uncertain_a.", {"enabled", "family", "mean", "spread"}, errors);
        get_field(u, "uncertain_a.", "enabled", cfg.uncertain_a.enabled, errors);
        get_enum(u, "uncertain_a.", "family", cfg.uncertain_a.family, kUncertainFamilies, errors);
        get_field(u, "uncertain_a.", "mean", cfg.uncertain_a.mean, errors);
        get_field(u, "uncertain_a.", "spread", cfg.uncertain_a.spread, errors);
    }

    get_field(doc, "", "horizon", cfg.horizon, errors);
    get_field(doc, "", "burn_in", cfg.burn_in, errors);
    get_field(doc, "", "trials", cfg.trials, errors);
    get_field(doc, "", "master_seed", cfg.master_seed, errors);
    get_field(doc, "", "divergence_threshold", cfg.divergence_threshold, errors);

    if (!errors.empty()) throw InvalidConfig(std::move(errors));
    return validate(cfg);
}

ExperimentConfig config_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidConfig({std::string("document: ") + e.what()});
    }
    return config_from_json(doc);
}

json config_to_json(const ExperimentConfig& cfg) {
    json doc;
    doc["params"] = {{"A", cfg.params.A},  {"B", cfg.params.B}, {"C", cfg.params.C},
                     {"Q", cfg.params.Q},  {"R", cfg.params.R}, {"W", cfg.params.W},
                     {"V", cfg.params.V},  {"observed", to_string(cfg.params.observed)}};
    doc["disturbance"] = {{"family", to_string(cfg.disturbance.family)},
                          {"stddev", cfg.disturbance.stddev}};
    json channel = {{"kind", to_string(cfg.channel.kind)}};
    if (cfg.channel.kind == ChannelKind::Awgn) channel["snr"] = cfg.channel.snr;
    if (cfg.channel.kind == ChannelKind::Quantized) {
        json q = {{"type", to_string(cfg.channel.quantizer.kind)}};
        if (cfg.channel.quantizer.kind == QuantizerKind::Uniform)
            q["step"] = cfg.channel.quantizer.step;
        else
            q["levels"] = cfg.channel.quantizer.levels;
        channel["quantizer"] = q;
    }
    doc["channel"] = channel;
    doc["uncertain_a"] = {{"enabled", cfg.uncertain_a.enabled},
                          {"family", to_string(cfg.uncertain_a.family)},
                          {"mean", cfg.uncertain_a.mean},
                          {"spread", cfg.uncertain_a.spread}};
    doc["horizon"] = cfg.horizon;
    doc["burn_in"] = cfg.burn_in;
    doc["trials"] = cfg.trials;
    doc["master_seed"] = cfg.master_seed;
    doc["divergence_threshold"] = cfg.divergence_threshold;
    return doc;
}

} // namespace netlqg
