#include "netlqg/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "netlqg/config_json.hpp"

namespace netlqg {

namespace {

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string opt_field(const std::optional<double>& v) {
    return v ? fmt9(*v) : std::string{};
}

std::optional<double> parse_opt(const std::string& field) {
    if (field.empty()) return std::nullopt;
    return std::stod(field);
}

std::string iso_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

RunManifest make_manifest(const ExperimentConfig& cfg, std::vector<std::string> warnings) {
    RunManifest m;
    m.config_echo = config_to_json(cfg);
    m.master_seed = cfg.master_seed;
    m.timestamp = iso_now();
    m.warnings = std::move(warnings);
    return m;
}

std::string csv_body(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "control_var,info_bits,sim_cost_mean,sim_cost_stderr,"
           "computed_cost,bound_cost,diverged_fraction\n";
    for (const auto& r : records) {
        out << fmt9(r.control_var) << ',' << opt_field(r.info_bits) << ','
            << opt_field(r.sim_cost_mean) << ',' << opt_field(r.sim_cost_stderr) << ','
            << opt_field(r.computed_cost) << ',' << opt_field(r.bound_cost) << ','
            << fmt9(r.diverged_fraction) << '\n';
    }
    return out.str();
}

void write_csv(const std::vector<SweepRecord>& records, const RunManifest& manifest,
               const std::string& path) {
    {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << csv_body(records);
        if (!out) throw std::runtime_error("write failed: " + path);
    }
    nlohmann::json m;
    m["config_echo"] = manifest.config_echo;
    m["artifact_version"] = manifest.artifact_version;
    m["master_seed"] = manifest.master_seed;
    m["timestamp"] = manifest.timestamp;
    m["warnings"] = manifest.warnings;
    std::ofstream mout(path + ".manifest.json");
    if (!mout) throw std::runtime_error("cannot open manifest file: " + path + ".manifest.json");
    mout << m.dump(2) << '\n';
}

std::vector<SweepRecord> parse_csv(const std::string& body) {
    std::vector<SweepRecord> records;
    std::istringstream in(body);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        while (fields.size() < 7) fields.emplace_back();
        SweepRecord r;
        r.control_var = std::stod(fields[0]);
        r.info_bits = parse_opt(fields[1]);
        r.sim_cost_mean = parse_opt(fields[2]);
        r.sim_cost_stderr = parse_opt(fields[3]);
        r.computed_cost = parse_opt(fields[4]);
        r.bound_cost = parse_opt(fields[5]);
        r.diverged_fraction = std::stod(fields[6]);
        records.push_back(r);
    }
    return records;
}

std::string codebook_csv(const Codebook& cb) {
    std::ostringstream out;
    out << "level,upper_threshold\n";
    for (std::size_t i = 0; i < cb.levels.size(); ++i) {
        out << fmt9(cb.levels[i]) << ',';
        if (i < cb.thresholds.size()) out << fmt9(cb.thresholds[i]);
        out << '\n';
    }
    return out.str();
}

} // namespace netlqg
