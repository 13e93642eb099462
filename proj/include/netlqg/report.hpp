#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "netlqg/model.hpp"
#include "netlqg/sim.hpp"

namespace netlqg {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Reproducibility sidecar written next to every CSV: re-running from the
/// echoed config reproduces the CSV body exactly.
struct RunManifest {
    nlohmann::json config_echo;
    std::string artifact_version = kArtifactVersion;
    std::uint64_t master_seed = 0;
    std::string timestamp;
    std::vector<std::string> warnings;
};

RunManifest make_manifest(const ExperimentConfig& cfg, std::vector<std::string> warnings = {});

/// CSV body (header + rows), numbers rendered with 9 significant digits,
/// empty fields for absent optionals.
std::string csv_body(const std::vector<SweepRecord>& records);

/// Writes the CSV to path and the manifest to "<path>.manifest.json".
void write_csv(const std::vector<SweepRecord>& records, const RunManifest& manifest,
               const std::string& path);

/// Parses a CSV body produced by csv_body (round-trip checks, plotting glue).
std::vector<SweepRecord> parse_csv(const std::string& body);

/// Codebook CSV: "level,upper_threshold" rows, last row's threshold empty.
std::string codebook_csv(const Codebook& cb);

} // namespace netlqg
